//! Verify a combinatorial prediction against actual geometry: sample generic
//! rational reference points, build the hyperplanes exactly, compute the
//! intersection semilattice from equations alone, and compare every count.
//!
//! Run with: cargo run --example verify_two_paths

use perpdiss::cli::verify_graph;
use perpdiss::exact::Rat;
use perpdiss::geometry::sample_generic;
use perpdiss::graph::GainGraph;

fn main() {
    // a mixed gain graph: some bisectors, some offset perpendiculars,
    // one balanced triangle hiding in the gains
    let graph = GainGraph::new(
        4,
        vec![
            (1, 2, Rat::zero()),
            (1, 3, Rat::from_int(2)),
            (2, 3, Rat::from_int(2)),
            (1, 4, Rat::zero()),
            (2, 4, Rat::new(-1, 2)),
            (3, 4, Rat::from_int(1)),
        ],
        Rat::zero(),
    )
    .unwrap();

    let d = 2;
    let points = sample_generic(&graph, d, 2024, 1_000_000, 100).unwrap();
    println!("sampled generic reference points:");
    for i in 1..=graph.n() {
        println!("  Q{i} = {:?}", points.point(i));
    }

    let report = verify_graph(&graph, &points, d).unwrap();
    println!("\ncomparisons:");
    for c in &report.comparisons {
        println!(
            "  {} {:<16} {}",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    println!(
        "\npredicted {} regions ({} bounded); geometry found {} ({})",
        report.predicted.f[d], report.predicted.b[d], report.geometric.f[d], report.geometric.b[d]
    );
    assert!(report.pass);
}
