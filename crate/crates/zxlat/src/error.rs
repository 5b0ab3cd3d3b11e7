use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a generalized Hermite normal form: {0}")]
    NotGhnf(String),
    #[error("the presentation is improper (the ideal is [1])")]
    Improper,
    #[error("lattice is not x-saturated")]
    NotXSaturated,
    #[error("unsupported coefficient field: {0}")]
    UnsupportedCoefficient(String),
    #[error("degree cap {cap} exceeded by degree {deg}")]
    DegreeCap { cap: usize, deg: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
