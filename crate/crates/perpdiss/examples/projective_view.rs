//! The projective picture: add the ideal hyperplane, and the intersection
//! lattice becomes the complete lift of the gain graph — balanced flats plus
//! one extra element per closed set of the underlying graph. Face counts of
//! the projectivized arrangement then come from the same Whitney machinery.
//!
//! Run with: cargo run --example projective_view

use perpdiss::counts::{make_family, projective_counts, FamilySpec};
use perpdiss::graph::BalanceMode;
use perpdiss::lattice::lift_lattice;

fn main() {
    // three concurrent bisector lines plus the ideal line in the projective plane
    let graph = make_family(&FamilySpec::Bisectors { n: 3 }).unwrap();
    let lift = lift_lattice(&graph, BalanceMode::Exact, 3).unwrap();
    println!(
        "complete lift of (K_3, 0): {} elements, top rank {}",
        lift.len(),
        lift.top_rank()
    );
    println!(
        "characteristic polynomial: {}",
        lift.characteristic_polynomial()
    );

    let (pf, pa) = projective_counts(&lift, 2).unwrap();
    println!("\nprojective plane cut by 3 concurrent lines + the ideal line:");
    for k in (0..=2).rev() {
        let f = pf[k].map_or("-".into(), |v| v.to_string());
        println!("  dimension {k}: {f} faces, {} flats", pa[k]);
    }

    // the Catalan triangle: lift polynomial gains the extra root 1
    let catalan = make_family(&FamilySpec::Catalan { n: 3 }).unwrap();
    let lift = lift_lattice(&catalan, BalanceMode::Exact, 3).unwrap();
    println!(
        "\ncomplete lift of [-1,1]K_3: p(λ) = {}",
        lift.characteristic_polynomial()
    );

    let (pf, _) = projective_counts(&lift, 2).unwrap();
    println!("projective regions: {}", pf[2].unwrap());
}
