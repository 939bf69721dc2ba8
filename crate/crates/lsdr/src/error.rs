//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by matrix containers, operators, solvers, and ingestion.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    DimensionMismatch {
        expected: String,
        found: String,
        context: &'static str,
    },

    #[error("non-canonical observation: nonzero value {value} at unobserved entry ({row}, {col})")]
    NonCanonical { row: usize, col: usize, value: f64 },

    #[error("non-finite value at entry ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("threshold must be nonnegative, got {0}")]
    NegativeThreshold(f64),

    #[error("singular value decomposition failed: {0}")]
    SvdFailure(String),

    #[error("dimension too small for {op}: need at least 2 {axis}")]
    DegenerateDimension { op: &'static str, axis: &'static str },

    #[error("ground-truth matrix is identically zero")]
    ZeroTruth,

    #[error("matrix is identically zero")]
    ZeroMatrix,

    #[error("did not converge within {limit} sweeps")]
    NonConvergence { limit: usize },

    #[error("malformed record at line {line}: {message}")]
    MalformedLine { line: u64, message: String },

    #[error("missing or wrong header: expected `{expected}`")]
    MissingHeader { expected: &'static str },

    #[error("record references node `{0}` absent from the explicit node order")]
    UnknownNode(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, found: impl ToString, context: &'static str) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
            context,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
