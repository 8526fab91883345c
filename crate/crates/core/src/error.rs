use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input that violates an operation's preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A computation hit a state that valid data cannot produce.
    #[error("internal error: {0}")]
    Internal(String),
    /// Not enough published data to carry out the computation.
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
