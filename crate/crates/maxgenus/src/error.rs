//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    InvalidField(u64),
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("operands belong to different ambient rings")]
    RingMismatch,
    #[error("monomial of degree {found} exceeds homogenization degree {max}")]
    DegreeOverflow { found: u32, max: u32 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("verification methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
