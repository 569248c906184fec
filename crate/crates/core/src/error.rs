use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree cap {cap} exceeded by a term of degree {degree}")]
    DegreeCap { cap: u32, degree: u32 },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("truncation box too small: {0}")]
    Truncation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
