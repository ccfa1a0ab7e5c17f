//! Power diagrams from the paraboloid: lift each site to the paraboloid
//! z = |x|², displace its tangent space vertically by the site weight, and
//! project the pairwise tangent intersections back down. The result is
//! exactly the perpendicular arrangement of the switched all-zero complete
//! gain graph, and the roundtrip checks it equation by equation.
//!
//! Run with: cargo run --example paraboloid_lift

use perpdiss::counts::{make_family, FamilySpec};
use perpdiss::exact::Rat;
use perpdiss::geometry::{paraboloid_roundtrip, pythagorean_coordinate, PointConfiguration};

fn main() {
    let weights = vec![
        Rat::from_int(3),
        Rat::new(1, 2),
        Rat::from_int(-2),
        Rat::zero(),
    ];
    let graph = make_family(&FamilySpec::PowerDiagram {
        n: 4,
        weights: weights.clone(),
    })
    .unwrap();

    let points = PointConfiguration::new(
        2,
        vec![
            vec![Rat::zero(), Rat::zero()],
            vec![Rat::from_int(5), Rat::from_int(1)],
            vec![Rat::from_int(2), Rat::from_int(6)],
            vec![Rat::from_int(-3), Rat::from_int(4)],
        ],
    )
    .unwrap();

    let report = paraboloid_roundtrip(&graph, &points).unwrap();
    println!("tangent displacements recovered from the gains:");
    for i in 1..=4 {
        println!(
            "  site {i}: weight {} → displacement {}",
            weights[i - 1],
            report.eta.get(i)
        );
    }
    println!("\nroundtrip verified: {}", report.verified);
    assert!(report.verified);

    // each separator sits where the weighted tangent lengths agree
    let hs = perpdiss::geometry::build_arrangement(&graph, &points).unwrap();
    for e in graph.edges() {
        // any point of the separator
        let p = {
            let flat = perpdiss::geometry::AffineFlat::from_equations(
                2,
                vec![{
                    let mut row = hs[e.id].normal.clone();
                    row.push(hs[e.id].offset.clone());
                    row
                }],
            )
            .unwrap();
            flat.particular_point()
        };
        let psi = pythagorean_coordinate(&p, points.point(e.i), points.point(e.j));
        assert_eq!(psi, report.eta.get(e.i) - report.eta.get(e.j));
    }
    println!("every separator satisfies d(P,Q_i)² − η(i) = d(P,Q_j)² − η(j)");
}
