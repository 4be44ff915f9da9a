use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{n} is not admissible: {reason}")]
    NotAdmissible { n: u64, reason: String },

    /// A division that must be exact left a remainder, or a count came out
    /// negative. Always an implementation bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("brute force refused: n = {n} exceeds the order-{order} ceiling of {ceiling}; use --method formula")]
    CeilingExceeded { n: u64, order: u32, ceiling: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
