//! The symmetric families [-k,k]K_n (2k+1 equally spaced perpendiculars per
//! reference line, bisector included): their balanced flats are composed
//! partitions, and the balanced chromatic polynomial collapses to a falling
//! factorial, λ(λ−nk−1)_{n−1}. The complete lift adds one more factor λ−1.
//!
//! Run with: cargo run --example composed_partitions

use perpdiss::counts::{composed_partition_chi, make_family, FamilySpec};
use perpdiss::graph::BalanceMode;
use perpdiss::lattice::{enumerate_flats, lift_lattice, polynomials};

fn main() {
    for (n, k) in [(3usize, 1usize), (3, 2), (4, 1), (4, 2)] {
        let graph = make_family(&FamilySpec::Odd { n, k }).unwrap();
        let semilattice = enumerate_flats(&graph, BalanceMode::Exact, n - 1).unwrap();
        let (chi, _) = polynomials(&semilattice.whitney(), n);
        let (chi_closed, lift_closed) = composed_partition_chi(n, k).unwrap();
        let lift = lift_lattice(&graph, BalanceMode::Exact, n).unwrap();
        let lift_poly = lift.characteristic_polynomial();

        println!(
            "[-{k},{k}]K_{n}: {} edges, {} flats",
            graph.edge_count(),
            semilattice.len()
        );
        println!("  flats by rank: {:?}", semilattice.rank_counts());
        println!("  χᵇ(λ)       = {chi}");
        println!("  lift p(λ)   = {lift_poly}");
        assert_eq!(chi, chi_closed);
        assert_eq!(lift_poly, lift_closed);
        println!();
    }
}
