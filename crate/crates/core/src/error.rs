use thiserror::Error;

/// Errors raised by the algebra kernel and the invariants built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in the prime field")]
    ZeroInverse,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("monomial quotient is not defined: divisor does not divide dividend")]
    NotDivisible,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operands use different monomial orders")]
    OrderMismatch,
    #[error("exponent overflow (exponents must stay below {limit})")]
    DegreeOverflow { limit: u32 },
    #[error("ring has {given} variables, at most {max} are supported")]
    TooManyVariables { given: usize, max: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("Groebner basis computation exceeded the budget of {cap} reduction steps")]
    BudgetExceeded { cap: u64 },
    #[error("saturation did not stabilize within {cap} iterations")]
    IterationCapExceeded { cap: usize },
    #[error("input must be homogeneous")]
    NonHomogeneous,
    #[error("ideal must be generated in a single degree")]
    NotEquigenerated,
    #[error("quotient has infinite length")]
    InfiniteLength,
    #[error("containment required by the construction fails: {0}")]
    NotContained(String),
    #[error("size violation: {0}")]
    SizeViolation(String),
    #[error("variable index {0} out of range")]
    BadVariable(usize),
    #[error("seed {seed} looks non-generic: {reason}")]
    NonGenericSeed { seed: u64, reason: String },
    #[error("data is unstable: {0}")]
    Unstable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
