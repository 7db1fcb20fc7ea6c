use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2 <= p < 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear part is not invertible")]
    NotInvertible,
    #[error("the eigenvalue-1 primary component is zero")]
    EmptyV1,
    #[error("vector does not lie in the eigenvalue-1 primary component")]
    VectorNotInV1,
    #[error("vector does not generate a complemented cyclic submodule")]
    NotComplemented,
    #[error("the maps are not similar")]
    NotSimilar,
    #[error("tau differs: {0} vs {1}")]
    TauMismatch(usize, usize),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
