use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {values:?}: {reason}")]
    MalformedPartition { values: Vec<i64>, reason: &'static str },

    #[error("no finiteness bound for statistic `{stat}` on this set: {reason}")]
    NoFinitenessCertificate { stat: &'static str, reason: &'static str },

    #[error("statistic `{0}` is not additive over parts")]
    NotAdditive(&'static str),

    #[error("integer overflow in coefficient arithmetic")]
    Overflow,

    #[error("series inverse needs constant term +1 or -1, found {0}")]
    NonUnitConstant(i64),

    #[error("infinite product with a degree-0 modulus never terminates")]
    DegenerateModulus,

    #[error("requested order {requested} exceeds the valid order {valid}")]
    OrderBeyondValidity { requested: usize, valid: usize },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn unknown(kind: &'static str, name: impl Into<String>) -> Error {
    Error::Unknown { kind, name: name.into() }
}

pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Error {
    Error::Invalid { kind, reason: reason.into() }
}
