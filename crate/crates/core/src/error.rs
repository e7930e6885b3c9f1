use thiserror::Error;

/// Errors raised by the enumeration and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: u32,
        limit: u32,
    },
    #[error("invalid numerical set: {0}")]
    InvalidSet(String),
    #[error("invalid subset mask: {0}")]
    InvalidMask(String),
    #[error("set is not closed under addition")]
    NotAMonoid,
    #[error("set has small atoms; the formula only holds on sets without small atoms")]
    NotInG,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("masks live in different windows ({0} vs {1})")]
    WindowMismatch(u32, u32),
    #[error("pair is not admissible")]
    NotAdmissible,
    #[error("window violation: {0}")]
    WindowViolation(String),
    #[error("set has no small atom")]
    NoSmallAtom,
    #[error("set has a small atom")]
    HasSmallAtom,
    #[error("expected an odd Frobenius number, got {0}")]
    EvenInput(u32),
    #[error("expected an even Frobenius number, got {0}")]
    OddInput(u32),
    #[error("wrong parity: expected odd Frobenius number, got {0}")]
    WrongParity(u32),
    #[error("set is not maximal negative semisymmetric")]
    NotSymmetric,
    #[error("mask is not sigma-admissible")]
    NotSigmaAdmissible,
    #[error("P is not carried onto its complement by the reflection x -> g - x")]
    BadSymmetricP,
    #[error("missing sequence data: {family} at index {index}")]
    MissingSequenceData { family: &'static str, index: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
