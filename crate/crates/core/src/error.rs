use thiserror::Error;

/// Errors raised by the solvers, converters and number-theory helpers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector is not unimodular (gcd = {gcd})")]
    NotUnimodular { gcd: String },

    #[error("input must be nonnegative, got {0}")]
    NegativeInput(String),

    #[error("input violates its defining equation: {0}")]
    InvariantViolation(String),

    #[error("u - v must be even (u = {u}, v = {v})")]
    ParityError { u: String, v: String },

    #[error("vectors are not orthogonal (dot product = {dot})")]
    NotOrthogonal { dot: String },

    #[error("no quintuple parameters found after repair moves: {0}")]
    UnreachableParams(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
