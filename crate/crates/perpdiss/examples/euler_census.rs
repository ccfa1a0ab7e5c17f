//! Two independent ways to count the pieces of a planar arrangement: the
//! Möbius machinery over the intersection semilattice, and a bare-hands
//! census of points and segments closed by the Euler relation f0 − f1 + f2 = 1.
//!
//! Run with: cargo run --example euler_census

use perpdiss::counts::{make_family, planar_counts, FamilySpec};
use perpdiss::geometry::{
    build_arrangement, geometric_counts, intersection_semilattice, planar_census, sample_generic,
};

fn main() {
    // bisectors plus two generic perpendiculars per reference line
    let graph = make_family(&FamilySpec::Fat {
        n: 3,
        m_extra: 2,
        seed: 9,
    })
    .unwrap();
    let stats = graph.planar_statistics().unwrap();
    println!(
        "gain graph: q = {} lines, s2 = {} crossing pairs, t = {} balanced triangles",
        stats.q, stats.s2, stats.t
    );

    let points = sample_generic(&graph, 2, 99, 1_000_000, 100).unwrap();
    let lines = build_arrangement(&graph, &points).unwrap();

    let (f0, f1, f2) = planar_census(&lines).unwrap();
    println!("census:  {f0} points, {f1} edges, {f2} regions (Euler relation)");

    let lattice = intersection_semilattice(&lines, 2).unwrap();
    let mobius = geometric_counts(&lattice, 2).unwrap();
    println!(
        "Möbius:  {} points, {} edges, {} regions",
        mobius.f[0], mobius.f[1], mobius.f[2]
    );

    let closed = planar_counts(stats.q, stats.s2, stats.t).unwrap();
    println!(
        "formula: {} points, {} edges, {} regions",
        closed.f[0], closed.f[1], closed.f[2]
    );

    assert_eq!(vec![f0, f1, f2], mobius.f);
    assert_eq!(closed.f, mobius.f);
    println!("\nall three paths agree");
}
