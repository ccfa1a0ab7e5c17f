//! The Catalan arrangement: perpendiculars at coordinates −1, 0, +1 on every
//! reference line. With affinely independent reference points in dimension
//! n−1 it has exactly n!·C_n regions, which this example derives three ways:
//! flat enumeration, the exponential generating function, and the closed
//! falling-factorial polynomial.
//!
//! Run with: cargo run --example catalan_regions

use perpdiss::cli::analyze_graph;
use perpdiss::counts::{composed_partition_chi, make_family, odd_chi_egf, FamilySpec};
use perpdiss::exact::{catalan, factorial, Rat};

fn main() {
    println!("  n   n!·C_n   enumeration   EGF   closed form");
    for n in 2..=5usize {
        let expected = factorial(n) * catalan(n);

        let graph = make_family(&FamilySpec::Catalan { n }).unwrap();
        let by_enumeration = analyze_graph(&graph, n - 1).unwrap().f[n - 1];

        let eval_regions = |chi: &perpdiss::exact::Polynomial| {
            let p = chi.polynomial_part_div_lambda_pow(1);
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            (p.eval(&Rat::from_int(-1)) * Rat::from_int(sign))
                .to_i128()
                .unwrap()
        };
        let by_egf = eval_regions(&odd_chi_egf(n, 1, 8).unwrap());
        let by_closed = eval_regions(&composed_partition_chi(n, 1).unwrap().0);

        println!("  {n}  {expected:>7}  {by_enumeration:>11}  {by_egf:>4}  {by_closed:>10}");
        assert_eq!(by_enumeration, expected);
        assert_eq!(by_egf, expected);
        assert_eq!(by_closed, expected);
    }

    println!("\nbalanced chromatic polynomials from the generating function:");
    for n in 2..=5usize {
        println!("  n = {n}: {}", odd_chi_egf(n, 1, 8).unwrap());
    }
}
