use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("totals differ: {0} vs {1}")]
    TotalMismatch(u32, u32),
    #[error("lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not symmetric under the transposition (X{a}, X{b}) of block {block}")]
    Symmetry { block: usize, a: usize, b: usize },
    #[error("too many variables: {0} (at most {max})", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("free decomposition failed: {0}")]
    Decomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
