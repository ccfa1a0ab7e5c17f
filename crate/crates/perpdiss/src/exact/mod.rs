//! Exact arithmetic: arbitrary-precision rationals, integer-coefficient
//! polynomial algebra, combinatorial number tables, rational row reduction,
//! and truncated formal power series with polynomial coefficients.
//!
//! All values are immutable after construction and every operation is pure.

mod matrix;
mod numbers;
mod poly;
mod rat;
mod series;

pub use matrix::RationalMatrix;
pub use numbers::{
    bell, binomial, catalan, factorial, falling_factorial_poly, stirling, StirlingKind,
};
pub use poly::{BivariatePolynomial, Polynomial};
pub use rat::Rat;
pub use series::{series_exp_of_integral, PolySeries};
