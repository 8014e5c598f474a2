use thiserror::Error;

use crate::ring::System;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: System, right: System },

    #[error("{0} is not divisible by the base")]
    NotDivisible(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("digit string is not a {window}-NAF")]
    NotWnaf { window: usize },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("variant {variant:?} is not defined for the {system} system")]
    UnknownVariant { variant: String, system: System },

    #[error("count does not fit the search accumulator")]
    Overflow,

    /// A structural property that holds for both supported systems failed to
    /// hold. Seeing this means a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
