use thiserror::Error;

/// Errors raised by the combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("invalid group datum: {0}")]
    InvalidDatum(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid class: {0}")]
    InvalidClass(String),

    #[error("{0} is not in the image of the Springer map")]
    NotInImage(String),

    #[error("{0} is not in the domain of the map")]
    NotInDomain(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("no descent case matches {0}")]
    CaseNotMatched(String),

    #[error("inconsistent formula output: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
