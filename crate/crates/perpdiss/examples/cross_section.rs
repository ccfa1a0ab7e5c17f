//! Every perpendicular arrangement is a cross-section of one whose reference
//! points are affinely independent: lift the points out of their space with
//! equal-length offsets, then section the lifted arrangement by the original
//! space. The roundtrip is verified exactly.
//!
//! Run with: cargo run --example cross_section

use perpdiss::counts::{make_family, FamilySpec};
use perpdiss::exact::Rat;
use perpdiss::geometry::{cross_section_embed, PointConfiguration};

fn main() {
    // five bisector lines from four planar points, lifted into 3-space
    let graph = make_family(&FamilySpec::Bisectors { n: 4 }).unwrap();
    let points = PointConfiguration::new(
        2,
        vec![
            vec![Rat::zero(), Rat::zero()],
            vec![Rat::from_int(7), Rat::from_int(1)],
            vec![Rat::from_int(2), Rat::from_int(5)],
            vec![Rat::from_int(-3), Rat::from_int(11)],
        ],
    )
    .unwrap();

    let lift = cross_section_embed(&graph, &points).unwrap();
    println!("lifted reference points in E^{}:", lift.points.d);
    for i in 1..=4 {
        println!("  Q'{i} = {:?}", lift.points.point(i));
    }
    println!("section flat has dimension {}", lift.flat.dim());
    println!("roundtrip verified: {}", lift.verified);
    assert!(lift.verified);

    // the one-codimension case needs mixed offset signs on a dependent set
    let line_points = PointConfiguration::new(
        1,
        vec![
            vec![Rat::zero()],
            vec![Rat::from_int(2)],
            vec![Rat::from_int(5)],
        ],
    )
    .unwrap();
    let g3 = make_family(&FamilySpec::Bisectors { n: 3 }).unwrap();
    let lift = cross_section_embed(&g3, &line_points).unwrap();
    println!("\nthree collinear points lifted to the plane:");
    for i in 1..=3 {
        println!("  Q'{i} = {:?}", lift.points.point(i));
    }
    assert!(lift.verified);
}
