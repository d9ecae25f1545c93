use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix must be square of order at least 2, got {0}")]
    BadOrder(usize),

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),

    #[error("projective image of the point is zero")]
    ZeroImage,

    #[error("invalid simplex point: {0}")]
    InvalidPoint(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid dimension {n}: {reason}")]
    Dimension { n: usize, reason: &'static str },

    #[error("invalid iterated function system: {0}")]
    InvalidIfs(String),

    #[error("digit {digit} out of range for an alphabet of size {alphabet}")]
    DigitOutOfRange { digit: usize, alphabet: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
