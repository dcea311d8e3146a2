use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid representation data: {0}")]
    InvalidRepr(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tolerance not reached: {0}")]
    Tolerance(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("evaluation point {0} lies within {1:e} of a pole; resample")]
    NearPole(String, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
