use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("characteristic {0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("ideal must have at least one generator")]
    EmptyGenerators,
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("expected a squarefree monomial ideal: {0}")]
    NotSquarefree(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("filtration has no level {0}")]
    MissingLevel(u64),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
