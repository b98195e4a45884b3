use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the caller's input does not hold.
    #[error("invalid input: {0}")]
    Input(String),
    /// The request is valid but exceeds a configured enumeration guard.
    #[error("refused: {0}")]
    Refused(String),
    /// A contract that the implementation guarantees was violated.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
