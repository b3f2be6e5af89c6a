//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("vertex label {label} out of range for order {order}")]
    BadLabel { label: usize, order: usize },
    #[error("invalid caterpillar: {0}")]
    InvalidCaterpillar(String),
    #[error("order {0} exceeds enumeration cap {1}")]
    OrderTooLarge(usize, usize),
    #[error("polynomial is not divisible by x (constant term nonzero)")]
    NotDivisible,
    #[error("probability {0} outside [0, 1]")]
    ProbOutOfRange(String),
    #[error("coefficient at index {0} is not strictly positive")]
    NonPositiveCoefficient(usize),
    #[error("degree {0} too small, need at least {1}")]
    DegreeTooSmall(usize, usize),
    #[error("no sign change on ({0}, {1})")]
    NoSignChange(String, String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("argument outside domain: {0}")]
    DomainError(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("target must be nonzero")]
    TargetZero,
    #[error("no witness found within order cap {0}")]
    NotFoundWithinCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
