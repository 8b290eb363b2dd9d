use thiserror::Error;

use crate::seq_model::Class;

/// Broad category of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// An argument violates an operation's precondition.
    Domain,
    /// The operation does not support the requested family.
    Unsupported,
    /// The request would enumerate more than the configured guard allows.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence length must be at least 1")]
    ZeroLength,
    #[error("radix must be at least 1 for non-empty sequences")]
    ZeroRadix,
    #[error("digit {digit} at position {position} is not below radix {radix}")]
    DigitOutOfRange { position: usize, digit: usize, radix: usize },
    #[error("digit type cannot represent values up to {max}")]
    DigitOverflow { max: usize },
    #[error("sequence is not a member of the {0} family")]
    NotMember(Class),
    #[error("suffix is not admissible in the {class} family of length {n}")]
    NotAdmissible { class: Class, n: usize },
    #[error("suffix of length {len} is longer than n = {n}")]
    SuffixTooLong { len: usize, n: usize },
    #[error("prefix of length {len} leaves nothing to extend for n = {n}")]
    PrefixTooLong { len: usize, n: usize },
    #[error("the {class} family is not supported by {operation}")]
    UnsupportedClass { class: Class, operation: &'static str },
    #[error("n = {n} exceeds the enumeration guard of {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("invalid range {min}..={max} (allowed {lo}..={hi})")]
    InvalidRange { min: usize, max: usize, lo: usize, hi: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::UnsupportedClass { .. } => ErrorKind::Unsupported,
            Error::GuardExceeded { .. } => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
