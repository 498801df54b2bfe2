//! Exact scalars over ℚ and ℚ(i), symbolic weights and sparse row reduction.

mod gauss;
mod linalg;
mod rat;
mod weight;

pub(crate) use gauss::parse_gauss;
pub use gauss::{ceil_re, GaussRat};
pub use linalg::{membership, row_reduce, RowEchelon, SparseVec};
pub use rat::{binom, Rat};
pub use weight::WeightExpr;

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}
