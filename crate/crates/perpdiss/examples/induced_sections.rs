//! Peer into a flat of a bisector arrangement: the hyperplanes cut it in a
//! pattern that is again a perpendicular arrangement, described by switching
//! the gains by squared distances and collapsing coalesced vertices. The
//! example also exhibits a line whose induced points are NOT centrally
//! symmetric — so that section, although it comes from bisectors, cannot be
//! rebuilt as bisectors of points inside the line.
//!
//! Run with: cargo run --example induced_sections

use perpdiss::counts::{make_family, FamilySpec};
use perpdiss::exact::Rat;
use perpdiss::geometry::{
    build_arrangement, induced_arrangement, intersection_semilattice, is_centrally_symmetric,
    sample_generic,
};

fn main() {
    let graph = make_family(&FamilySpec::Bisectors { n: 5 }).unwrap();
    let points = sample_generic(&graph, 2, 804, 1_000_000, 100).unwrap();
    let lines = build_arrangement(&graph, &points).unwrap();
    let lattice = intersection_semilattice(&lines, 2).unwrap();

    let mut verified = 0;
    let mut asymmetric = 0;
    for flat in lattice.flats() {
        if flat.dim() != 1 {
            continue;
        }
        let section = induced_arrangement(&graph, &points, flat).unwrap();
        assert!(section.verified);
        verified += 1;

        // feet of the surviving perpendiculars, in a chart of the line
        let feet: Vec<Rat> = {
            let hs = build_arrangement(&section.graph, &section.points).unwrap();
            let mut feet: Vec<Rat> = vec![];
            for h in &hs {
                let coord = h.offset.clone() / h.normal[0].clone();
                if !feet.contains(&coord) {
                    feet.push(coord);
                }
            }
            feet
        };
        let symmetric = is_centrally_symmetric(&feet);
        if !symmetric {
            asymmetric += 1;
        }
        if flat.containing.len() == 1 {
            println!(
                "line from bisector {}: {} vertices left, {} induced points, centrally symmetric: {symmetric}",
                flat.containing[0],
                section.graph.n(),
                feet.len(),
            );
        }
    }
    println!("\nsections verified on all {verified} lines; {asymmetric} had asymmetric point sets");
    assert!(asymmetric > 0, "generic sections are asymmetric");
}
