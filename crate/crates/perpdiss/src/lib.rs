//! Exact-arithmetic engine for perpendicular dissections of Euclidean space.
//!
//! Given `n` reference points in `d`-space and, for each pair of points, a set
//! of hyperplanes perpendicular to the connecting line, this crate predicts the
//! flat/face/bounded-face counts of the resulting arrangement from a *real
//! additive gain graph* — a multigraph whose edges carry exact rational gains
//! read with a sign that flips under orientation reversal — and then verifies
//! those predictions by actually constructing the arrangement over rational
//! reference points and computing its intersection semilattice independently.
//!
//! The two pipelines are deliberately separate so that each can serve as an
//! oracle for the other:
//!
//! * the combinatorial path enumerates the balanced flats of the gain graph,
//!   runs Möbius/Whitney machinery over the resulting geometric semilattice,
//!   and evaluates characteristic polynomials ([`lattice`], [`counts`]);
//! * the geometric path intersects the actual hyperplanes over `Q^d`, keyed by
//!   canonical row-reduced constraint systems, and applies the same Möbius
//!   machinery to the geometric poset ([`geometry`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals, so equality
//! of counts is integer equality with zero tolerance.
//!
//! See the `examples/` directory for one runnable program per major
//! capability, and the `perpdiss` binary for the `analyze` / `verify` /
//! `family` / `render` command-line surface.

pub mod cli;
pub mod counts;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod graph;
pub mod lattice;

pub use counts::{CountReport, FamilySpec};
pub use error::Error;
pub use exact::{Polynomial, Rat, RationalMatrix};
pub use graph::{BalanceMode, Edge, GainGraph, Partition, SwitchingFunction};
pub use lattice::{Flat, LiftLattice, Semilattice, WhitneyTable};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
