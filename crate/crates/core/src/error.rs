use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed recurrence: {0}")]
    MalformedSpec(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    /// Enumeration was refused because it would materialize too many objects.
    #[error("enumeration would produce {count} objects, exceeding the cap of {cap}")]
    CapExceeded { count: BigInt, cap: u64 },

    #[error("denominator has a zero constant term, the series is not expandable")]
    NotExpandable,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("method `{method}` is not available for identity `{identity}`")]
    UnsupportedMethod {
        identity: &'static str,
        method: &'static str,
    },

    #[error("certificate refused: lhs and rhs differ at n = {witness} ({lhs} != {rhs})")]
    CertificateRefused {
        witness: u64,
        lhs: BigInt,
        rhs: BigInt,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
