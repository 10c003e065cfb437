use thiserror::Error;

/// Errors raised by the core engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {op} on {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must be non-empty")]
    Empty,

    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("invalid index {index}: {constraint}")]
    InvalidIndex { index: i64, constraint: String },

    #[error("{family} index {index} out of range: {constraint}")]
    FamilyBounds {
        family: String,
        index: usize,
        constraint: &'static str,
    },

    #[error("unsupported family {family}: {reason}")]
    UnsupportedFamily { family: String, reason: &'static str },

    #[error("invalid input matrix: {0}")]
    Validation(String),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("block hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no c in (1, {bound}] with S f_c(W) S^t nonzero")]
    InvariantNotFound { bound: usize },

    #[error("certificate of kind {kind} cannot be extrapolated; promote it to a uniform certificate first")]
    UnsupportedExtrapolation { kind: &'static str },

    #[error("resolution model violated at step {step}: {reason}")]
    ModelViolation { step: usize, reason: String },

    #[error("no verdict within scan bound {bound}: no period, no growth certificate, no envelope breach")]
    Inconclusive { bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
