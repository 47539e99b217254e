use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A brute-force or enumeration bound was exceeded.
    #[error("{what} = {requested} exceeds the cap of {cap} (raise it with {hint})")]
    Capacity {
        what: &'static str,
        requested: i64,
        cap: i64,
        hint: &'static str,
    },

    /// Two weights or group elements of different ranks were combined.
    #[error("rank mismatch: expected rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
