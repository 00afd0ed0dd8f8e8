use thiserror::Error;

use crate::net::TValueResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {m} outside supported range 1..={max}")]
    DimensionOutOfRange { m: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    Singular,

    /// The leading principal minor of size `k` (1-based) vanishes.
    #[error("no unit-diagonal LU factorization: leading minor of size {k} is singular")]
    NoFactorization { k: usize },

    #[error("multiplicative order exceeds cap {cap}")]
    CapExceeded { cap: u64 },

    #[error("enumeration at m = {m} exceeds the limit m <= {max}")]
    EnumerationTooLarge { m: usize, max: usize },

    #[error("geometric t-value needs {required} cell assignments, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("t-value is {}, not 0 (witness composition {:?})", .0.t, .0.witness)]
    NotT0(TValueResult),

    #[error("no unit-diagonal lower-triangular L with L*C = C' exists (row {row} fails)")]
    NoSolution { row: usize },

    #[error("recurrence seed must be nonzero")]
    ZeroSeed,

    #[error("matrix is not primitive")]
    NotPrimitive,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An outcome the characterization theorem rules out. Reaching it means
    /// the implementation is wrong; the message carries the full input.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
