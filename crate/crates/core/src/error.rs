use std::path::PathBuf;

use thiserror::Error;

use crate::hbnum::HbKey;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A key outside the domain of the numbers, e.g. `N = 0` or `r = 0`.
    #[error("invalid key: {0}")]
    InvalidKey(String),

    /// The key is valid but the chosen route does not cover it
    /// (descent with `N = 1`, explicit sums with `n = 0`, ...).
    #[error("route precondition violated: {0}")]
    RoutePrecondition(String),

    /// A hypothesis of a congruence statement is not met.
    #[error("hypothesis {0} violated")]
    Hypothesis(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: &'static str },

    #[error("{}:{line}: malformed cache record: {reason}", path.display())]
    CacheFormat {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("cache records disagree for {key}: {first} vs {second}")]
    CacheConflict {
        key: HbKey,
        first: String,
        second: String,
    },

    #[error("cache audit failed for {key}: cached {cached}, recomputed {recomputed}")]
    CacheAudit {
        key: HbKey,
        cached: String,
        recomputed: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
