use thiserror::Error;

/// Errors raised by polynomial construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    /// Exact division left a nonzero remainder. `index` is the exponent of
    /// the first offending coefficient met while dividing from the top down.
    #[error("division is not exact: nonzero remainder coefficient at x^{index}")]
    NotDivisible { index: usize },

    #[error("index must be a positive integer, got {0}")]
    InvalidIndex(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("parameters are not pairwise coprime")]
    NotPairwiseCoprime,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("n = {n} has {divisor_count} divisors; masks address at most 64")]
    TooManyDivisors { n: u64, divisor_count: u32 },

    #[error(
        "x^{n}-1 has 2^{divisor_count} monic divisors, exceeding the enumeration budget of {budget}"
    )]
    BudgetExceeded {
        n: u64,
        divisor_count: u32,
        budget: u64,
    },

    #[error("no unique position with coefficient 2 in f_43 for (p, q) = ({p}, {q})")]
    NoUniquePosition { p: u64, q: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
