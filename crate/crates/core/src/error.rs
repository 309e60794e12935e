use thiserror::Error;

/// Errors reported by the simplification library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("invalid L_p exponent {0}: p must be at least 1")]
    InvalidExponent(f64),

    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("empty polyline")]
    EmptyPolyline,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed instance: {0}")]
    MalformedInstance(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
