//! Gain graph basics: orientation-aware gains, balance certificates,
//! switching, contraction, and collapsing.
//!
//! Run with: cargo run --example gain_graph_ops

use std::collections::BTreeSet;

use perpdiss::exact::Rat;
use perpdiss::graph::{BalanceMode, GainGraph, Partition, SwitchingFunction};

fn main() {
    // a triangle with cyclic gains 1, 2, −3: balanced because they sum to 0
    let triangle = GainGraph::new(
        3,
        vec![
            (1, 2, Rat::from_int(1)),
            (2, 3, Rat::from_int(2)),
            (3, 1, Rat::from_int(-3)),
        ],
        Rat::zero(),
    )
    .unwrap();
    let all: BTreeSet<usize> = (0..triangle.edge_count()).collect();

    let theta = triangle.potential(&all).unwrap().expect("balanced");
    println!("balanced triangle, potential θ = {theta:?}");
    println!("gain(e0; 1→2) = {}", triangle.gain(0, 1, 2).unwrap());
    println!("gain(e0; 2→1) = {}", triangle.gain(0, 2, 1).unwrap());

    // switching by the potential zeroes every gain
    let zeroed = triangle.switch(&SwitchingFunction::new(theta));
    println!(
        "after switching by θ, gains = {:?}",
        zeroed
            .edges()
            .iter()
            .map(|e| e.gain.clone())
            .collect::<Vec<_>>()
    );
    assert!(zeroed.edges().iter().all(|e| e.gain.is_zero()));

    // contracting two edges of the balanced triangle leaves a degenerate loop
    let contracted = triangle.contract(&[0, 1].into()).unwrap();
    println!(
        "contracting two edges: {} vertex, degenerate loops at {:?}",
        contracted.n(),
        contracted.degenerate_loops()
    );

    // the all-one-gain triangle is unbalanced in both senses
    let skew = GainGraph::new(
        3,
        vec![
            (1, 2, Rat::from_int(1)),
            (2, 3, Rat::from_int(2)),
            (3, 1, Rat::from_int(3)),
        ],
        Rat::zero(),
    )
    .unwrap();
    let all: BTreeSet<usize> = (0..skew.edge_count()).collect();
    println!(
        "\ncyclic gains 1,2,3: balanced(exact) = {}, balanced(zero-set) = {}",
        skew.is_balanced(&all, BalanceMode::Exact).unwrap(),
        skew.is_balanced(&all, BalanceMode::ZOnly).unwrap()
    );

    // collapsing identifies blocks and drops the loops that appear
    let pi = Partition::new(vec![vec![1, 2], vec![3]], 3).unwrap();
    let collapsed = skew.collapse(&pi).unwrap();
    println!(
        "collapsing {{1,2}}: {} vertices, {} edges survive",
        collapsed.n(),
        collapsed.edge_count()
    );

    // JSON round trip (the wire format of the command-line tools)
    let text = skew.to_json();
    assert_eq!(GainGraph::from_json(&text).unwrap(), skew);
    println!("\ngraph JSON:\n{text}");
}
