use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {found:?} at position {position} in {input:?}")]
    InvalidSymbol {
        input: String,
        position: usize,
        found: char,
    },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    /// A square root of a negative number was requested during evaluation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Elimination was asked to process an expression that is identically zero.
    #[error("expression is identically zero")]
    IdenticallyZero,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
