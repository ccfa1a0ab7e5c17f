//! Draw a planar arrangement as SVG: bisectors stroked heavier, reference
//! points as dots, lines clipped to a padded bounding box of all crossings.
//!
//! Run with: cargo run --example render_arrangement
//! (writes catalan_k3.svg to the current directory)

use perpdiss::counts::{make_family, FamilySpec};
use perpdiss::geometry::{build_arrangement, render_svg, sample_generic};

fn main() {
    let graph = make_family(&FamilySpec::Catalan { n: 3 }).unwrap();
    let points = sample_generic(&graph, 2, 12, 40, 200).unwrap();
    let lines = build_arrangement(&graph, &points).unwrap();
    let svg = render_svg(&graph, &points, &lines).unwrap();

    let path = "catalan_k3.svg";
    std::fs::write(path, &svg).unwrap();
    println!(
        "wrote {path}: {} lines ({} bisectors highlighted), {} reference points",
        lines.len(),
        graph.zero_set().len(),
        points.n()
    );
}
