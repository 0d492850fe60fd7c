use thiserror::Error;

/// Errors raised by the algebra engine and the verification front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("context mismatch: left N={left}, right N={right}")]
    ContextMismatch { left: usize, right: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("not stabilized: {0}")]
    NotStabilized(String),
    #[error("algebra has no unit")]
    NotUnital,
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
