use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("target is not in the span of the basis")]
    NotInSpan,
    #[error("superbracket needs homogeneous arguments")]
    NonHomogeneous,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange { what: &'static str, index: usize, bound: usize },
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unsupported schema version {0:?}")]
    UnsupportedSchema(String),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
