use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator index {index} out of range for an algebra with {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("algebra failed validation:\n{0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix with {columns} columns exceeds the column cap of {cap} ({context})")]
    ResourceLimit {
        columns: usize,
        cap: usize,
        context: String,
    },

    #[error("inconsistent formula value: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
