use thiserror::Error;

/// Errors raised while constructing or transforming pairwise comparison
/// matrices. Indices reported in messages are zero-based.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum PcmError {
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },
    #[error("entry ({i},{j}) = {value} must be finite and > 0")]
    NonPositiveEntry { i: usize, j: usize, value: f64 },
    #[error("reciprocity violated at ({i},{j}): |a_ij*a_ji - 1| = {deviation:e}")]
    ReciprocityViolation { i: usize, j: usize, deviation: f64 },
    #[error("upper triangle length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("order {n} too small: need at least {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("index ({i},{j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("subset of size {size} too small: need at least 2 distinct indices")]
    SubsetTooSmall { size: usize },
    #[error("sigma is not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },
    #[error("weight vector invalid: {reason}")]
    InvalidWeights { reason: String },
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// Errors raised by the index registry and index evaluation.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum IndexError {
    #[error("unknown index name {0:?}")]
    UnknownIndex(String),
    #[error("index {0:?} is a reserved name that is not implemented")]
    NotImplemented(String),
    #[error("no random-index entry for order {0}")]
    MissingRiEntry(usize),
    #[error("triad generator rejected: {0}")]
    GeneratorRejected(String),
    #[error(transparent)]
    Pcm(#[from] PcmError),
}
