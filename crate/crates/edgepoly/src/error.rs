use thiserror::Error;

/// Error type shared by all library modules.
///
/// The three variants correspond to the CLI exit codes: validation
/// errors (bad input, exit 2), domain errors (input outside the range
/// where an operation is defined, exit 3) and resource errors (a size
/// cap was hit, exit 4).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource error: {0}")]
    Resource(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
