//! Count the pieces that all perpendicular bisectors of n generic points cut
//! d-space into, two ways: by enumerating balanced flats of the all-zero
//! complete gain graph, and by the closed Stirling-number formulas.
//!
//! Run with: cargo run --example bisector_counts

use perpdiss::cli::analyze_graph;
use perpdiss::counts::{make_family, stirling_counts, FamilySpec};

fn main() {
    println!("regions cut out by all perpendicular bisectors of n points in d-space\n");
    println!("  n  d   regions   bounded   flats by dimension");
    for (n, d) in [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3), (6, 3)] {
        let graph = make_family(&FamilySpec::Bisectors { n }).unwrap();
        let report = analyze_graph(&graph, d).unwrap();
        let closed = stirling_counts(n, d).unwrap();
        assert_eq!(report.f, closed.f, "enumeration and closed form disagree");
        assert_eq!(report.a, closed.a);
        println!(
            "  {n}  {d}  {:>8}  {:>8}   {:?}",
            report.f[d], report.b[d], report.a
        );
    }
    println!("\ncharacteristic polynomial for n = 5, d = 3:");
    let graph = make_family(&FamilySpec::Bisectors { n: 5 }).unwrap();
    let report = analyze_graph(&graph, 3).unwrap();
    println!("  p(λ) = {}", report.p);
    println!("  regions = |p(-1)| = {}", report.f[3]);
}
