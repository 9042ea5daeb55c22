use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value is outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Two objects with different ambient variable counts were combined.
    #[error("ambient mismatch: expected n={expected}, got n={found}")]
    AmbientMismatch { expected: usize, found: usize },

    /// Depth and Stanley depth are undefined for the zero and unit ideals.
    #[error("{op} is undefined for the {kind} ideal")]
    Domain { op: &'static str, kind: &'static str },

    /// Exact methods are exponential; inputs above the documented bound are refused.
    #[error("capability bound exceeded: {what} requires n <= {limit}, got n={n}")]
    Capability { what: &'static str, limit: usize, n: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A proposed interval partition is not a partition of the poset.
    #[error("invalid partition: {reason} (witness {witness})")]
    Partition { reason: String, witness: Monomial },

    /// A mechanically checked claim did not hold.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
