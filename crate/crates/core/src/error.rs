use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truth table length {actual} does not match 2^{n} = {expected}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        actual: usize,
    },

    #[error("arity {n} outside supported range 1..={max}")]
    ArityOutOfRange { n: usize, max: usize },

    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("flip count {k} exceeds table size {size}")]
    FlipCountOutOfRange { k: usize, size: usize },

    #[error("distance parameter {0} must lie strictly between 0 and 1")]
    EpsilonOutOfRange(f64),

    #[error("overlap {0} must lie in [0, 1]")]
    OverlapOutOfRange(f64),

    #[error("operation requires at least {required} input bits, got {n}")]
    ArityTooSmall { n: usize, required: usize },

    #[error(
        "observed measurement branch has probability {0:e}; collapse is numerically degenerate"
    )]
    DegenerateCollapse(f64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
