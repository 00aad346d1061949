use thiserror::Error;

/// Errors raised by the algebra, translation and group modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid selector {0}")]
    InvalidSelector(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operator is not complex linear: {0}")]
    NotComplexLinear(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular system: {0}")]
    Singular(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
