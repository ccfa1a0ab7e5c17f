//! Combinatorial number tables: Stirling numbers of both kinds, Bell and
//! Catalan numbers, binomials, and falling-factorial polynomials.
//!
//! Values are exact `i128`; the table sizes used anywhere in this crate stay
//! far below overflow (indices are asserted small).

use super::poly::Polynomial;
use super::rat::Rat;

/// Which kind of Stirling number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed Stirling numbers of the first kind `s(n,k)`.
    First,
    /// Stirling numbers of the second kind `S(n,k)`.
    Second,
}

const MAX_N: usize = 30;

/// Stirling number by the standard recurrences:
/// `s(n,k) = s(n-1,k-1) - (n-1)·s(n-1,k)` and
/// `S(n,k) = S(n-1,k-1) + k·S(n-1,k)`.
///
/// Out-of-range `k` returns 0.
pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> i128 {
    assert!(n <= MAX_N, "stirling table capped at n = {MAX_N}");
    if k > n {
        return 0;
    }
    // row-by-row dynamic program
    let mut row = vec![0i128; n + 1];
    row[0] = 1;
    for m in 1..=n {
        let prev = row.clone();
        row[0] = 0;
        for j in 1..=m {
            row[j] = match kind {
                StirlingKind::First => prev[j - 1] - (m as i128 - 1) * prev[j],
                StirlingKind::Second => prev[j - 1] + j as i128 * prev[j],
            };
        }
    }
    row[k]
}

/// Bell number `B(n) = Σ_k S(n,k)`.
pub fn bell(n: usize) -> i128 {
    (0..=n).map(|k| stirling(StirlingKind::Second, n, k)).sum()
}

/// Catalan number `C_n = binom(2n,n)/(n+1)`.
pub fn catalan(n: usize) -> i128 {
    assert!(n <= MAX_N, "catalan capped at n = {MAX_N}");
    binomial(2 * n, n) / (n as i128 + 1)
}

/// Binomial coefficient, 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Factorial as i128.
pub fn factorial(n: usize) -> i128 {
    assert!(n <= 33, "factorial capped at n = 33");
    (1..=n as i128).product()
}

/// The expanded polynomial `(λ−a)(λ−a−1)···(λ−a−r+1)` — a falling factorial
/// `(λ−a)_r` shifted by a rational `a`. The empty product (r = 0) is 1.
pub fn falling_factorial_poly(shift: &Rat, r: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..r {
        let root = shift + &Rat::from_int(i as i64);
        acc = acc.mul(&Polynomial::from_coeffs(vec![-root, Rat::one()]));
    }
    acc
}
