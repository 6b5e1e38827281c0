use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is larger than the operation is willing to enumerate.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: u64,
        limit: u64,
    },
    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    /// The input is outside the domain of a numeric formula.
    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn capacity(
        what: &'static str,
        actual: impl Into<u64>,
        limit: impl Into<u64>,
    ) -> Self {
        Error::Capacity {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

/// Returns a capacity error when `actual > limit`.
pub(crate) fn ensure_at_most(what: &'static str, actual: u64, limit: u64) -> Result<()> {
    if actual > limit {
        Err(Error::capacity(what, actual, limit))
    } else {
        Ok(())
    }
}
