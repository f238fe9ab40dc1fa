use thiserror::Error;

/// Errors produced by the pebbling engine.
///
/// `ResourceLimit` is kept apart from negative answers: a search that ran out
/// of budget says nothing about coverability.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("illegal move at index {index}: {reason}")]
    IllegalMove { index: usize, reason: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
