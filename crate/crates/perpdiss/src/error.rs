//! Crate-wide error type.
//!
//! The variants deliberately mirror the exit codes of the command-line
//! surface: input problems, resource guards, and sampling exhaustion are kept
//! distinct so scripts can tell a malformed file from a combinatorial
//! explosion from bad luck with random reference points.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: unparsable JSON, bad rational string, invalid flags.
    #[error("input error: {0}")]
    Input(String),

    /// A size guard tripped (too many forests, hyperplanes, or flats).
    #[error("resource guard exceeded: {0}")]
    Guard(String),

    /// Rejection sampling ran out of retries.
    #[error("sampling failed: {0}")]
    Sampling(String),

    /// An operation that requires a balanced edge set was given an unbalanced one.
    #[error("edge set is not balanced")]
    Unbalanced,

    /// An edge id not present in the graph.
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),

    /// A parameter outside an operation's domain.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

impl Error {
    /// Exit code for the command-line surface: 2 input, 3 guard, 4 sampling.
    /// (Exit 1 is reserved for a verified mismatch, which is not an `Error`.)
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_)
            | Error::InvalidParam(_)
            | Error::UnknownEdge(_)
            | Error::Unbalanced => 2,
            Error::Guard(_) => 3,
            Error::Sampling(_) => 4,
        }
    }
}
