use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got 0")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {0}); not a numerical semigroup")]
    NotCoprime(usize),
    #[error("membership table bound {0} exceeds the supported size")]
    GeneratorsTooLarge(usize),
    #[error("{0} is not a nonzero member of the semigroup")]
    NotAMember(usize),
    #[error("input list is empty")]
    EmptyInput,
    #[error("reduction number search exceeded cap {cap} (frobenius {frobenius})")]
    ReductionCapExceeded { cap: usize, frobenius: i64 },
    #[error("exponent vector has {got} entries, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid scan bounds: {0}")]
    InvalidBounds(String),
    #[error("enumeration exceeded the safety cap of {0} semigroups")]
    BoundsTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
