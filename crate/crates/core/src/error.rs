use thiserror::Error;

use crate::solution::{Failure, Pair};

/// Errors raised by the library. Point indices carried in variants are
/// 0-based; their `Display` output is 1-based to match the I/O formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..{degree}: {detail}")]
    NotAPermutation { degree: usize, detail: String },

    #[error("index {index} out of range 1..{n}", index = .index + 1)]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("r is not involutive at {0}")]
    NotInvolutive(Pair),

    #[error("r is degenerate: {0}")]
    NotNondegenerate(Failure),

    #[error("braid relation fails: {0}")]
    BraidFails(Failure),

    #[error("sigma_{i}({i}) = {image}, expected a square-free input", i = .index + 1, image = .image + 1)]
    NotSquareFreeInput { index: usize, image: usize },

    #[error("sigma_i sigma_j = sigma_k sigma_l fails at {0}")]
    CriterionFails(Pair),

    #[error("subset is not invariant: sigma_{s}({x}) = {y} leaves it", s = .sigma + 1, x = .point + 1, y = .image + 1)]
    NotInvariant {
        sigma: usize,
        point: usize,
        image: usize,
    },

    #[error("partition is not compatible with r: {first} and {second} have class-equal inputs but different output classes")]
    IncompatiblePartition { first: Pair, second: Pair },

    #[error("Y and Z do not partition the point set: {0}")]
    NotAPartition(String),

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("integer overflow in exponent vector")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
