use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid growth parameters l={l}, m={m}: need 0 <= l <= m and m >= 1")]
    InvalidGrowth { l: usize, m: usize },

    #[error("size mismatch: {left} != {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("part overflow while building a partition")]
    Overflow,

    #[error("expansion is not homogeneous")]
    NonHomogeneous,

    #[error("non-integral Schur coefficient for {partition}")]
    NonIntegral { partition: String },

    #[error("oracle needs at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("empty value sequence")]
    EmptySequence,

    #[error("window must be at least 1")]
    InvalidWindow,

    #[error("recurrence needs m >= 2, got m={0}")]
    RecurrenceDegree(usize),

    #[error("recurrence needs a non-empty inner partition")]
    EmptyInner,

    #[error("verification failure in {what}: got {got}, expected {expected}")]
    Verification {
        what: String,
        got: BigInt,
        expected: BigInt,
    },
}
