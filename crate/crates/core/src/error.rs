use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one process exit code
/// of the command-line driver.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid field order, lengths, or a non-semisimple shape.
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation was applied outside its domain (zero code, zero matrix, shape mismatch).
    #[error("domain error: {0}")]
    Domain(String),

    /// Axis or coordinate out of range.
    #[error("index error: {0}")]
    Index(String),

    /// A precondition on the input object does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Enumeration would exceed the configured budget.
    #[error("capacity exceeded: {what} requires {required}, cap is {cap}")]
    Capacity {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    /// Malformed job document or command-line value.
    #[error("parse error: {0}")]
    Parse(String),

    /// A model invariant was violated. Always a bug.
    #[error("internal invariant breach: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::Domain(_)
            | Error::Index(_)
            | Error::Precondition(_)
            | Error::Parse(_)
            | Error::Io(_) => 2,
            Error::Capacity { .. } => 3,
            Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
