use thiserror::Error;

/// Errors raised by field operations, norm evaluation, inequality checks
/// and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field is in {found:?} space, operation requires {expected:?}")]
    SpaceMismatch {
        expected: crate::field::Space,
        found: crate::field::Space,
    },

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("solver fault at t = {t}: {message}")]
    SolverFault { t: f64, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
