use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("division by zero in cyclotomic field")]
    CycloDivisionByZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient field order mismatch: expected a multiple of {expected}, found {found}")]
    OrderMismatch { expected: u32, found: u32 },
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, GtError>;

pub(crate) fn invalid(msg: impl Into<String>) -> GtError {
    GtError::InvalidParams(msg.into())
}
