use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed group-spec text. `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A brute-force computation would exceed its configured size limit.
    #[error("limit exceeded: {what} has {size} elements, limit is {limit}")]
    LimitExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    /// Lifting an action from Z/p to Z/p^k produced matrices that no longer
    /// satisfy the presentation.
    #[error("lift verification failed: {0}")]
    LiftVerification(String),

    #[error("realization failed: {0}")]
    Realization(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
