use thiserror::Error;

/// Errors produced by the library and the command-line frontend.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {left} cells against {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("cache file rejected: {0}")]
    Cache(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn size(left: usize, right: usize) -> Self {
        Error::SizeMismatch { left, right }
    }
}
