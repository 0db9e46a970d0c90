use thiserror::Error;

/// Errors produced by game construction and index computation.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a structural precondition (bad player id, empty
    /// coalition where one is required, malformed partition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is well formed but exceeds a configured enumeration or
    /// memory budget; the caller should switch backends or rescale.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An internal consistency check failed. This indicates a bug, never a
    /// bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
