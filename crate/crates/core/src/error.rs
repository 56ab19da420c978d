use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("ambient group mismatch")]
    AmbientMismatch,
    #[error("empty operand: {0}")]
    EmptyOperand(&'static str),
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Raised when two routes that must agree by theorem disagree; always a bug.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
