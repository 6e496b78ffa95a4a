use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6/sparse6 input. `offset` is the byte position of the
    /// first offending character.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// A precondition on the input graph or arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested computation exceeds a configured resource cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            msg: msg.into(),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
