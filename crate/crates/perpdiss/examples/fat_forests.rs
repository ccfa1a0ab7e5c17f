//! Fat forests: when every pair of reference points gets its bisector plus M
//! generic perpendiculars, the flats of the arrangement are indexed by
//! vertex partitions carrying acyclic edge sets over the collapsed blocks.
//! The Whitney numbers then come from explicit partition sums, checked here
//! against direct semilattice enumeration.
//!
//! Run with: cargo run --example fat_forests

use perpdiss::counts::{fat_forest_whitney, make_family, planar_counts, FamilySpec};
use perpdiss::graph::BalanceMode;
use perpdiss::lattice::enumerate_flats;

fn main() {
    println!("  n  M   w (Möbius by rank)          fat trees   planar regions");
    for (n, m) in [(2usize, 1usize), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let (w, fat_trees) = fat_forest_whitney(n, m).unwrap();

        let graph = make_family(&FamilySpec::Fat {
            n,
            m_extra: m,
            seed: 5,
        })
        .unwrap();
        let table = enumerate_flats(&graph, BalanceMode::ZOnly, n - 1)
            .unwrap()
            .whitney();
        assert_eq!(table.w, w, "partition sums vs enumeration");
        assert_eq!(table.big_w[n - 1], fat_trees);

        let stats = graph.planar_statistics().unwrap();
        let regions = planar_counts(stats.q, stats.s2, stats.t).unwrap().f[2];
        println!(
            "  {n}  {m}   {:<24}  {fat_trees:>9}   {regions:>14}",
            format!("{w:?}")
        );
    }
}
