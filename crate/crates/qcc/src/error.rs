//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported; the constructions require an odd prime power")]
    EvenCharacteristic,
    #[error("field tower too large: p^(4e) must fit in 48 bits")]
    FieldTooLarge,
    #[error("multiplicative order of zero is undefined")]
    OrderOfZero,
    #[error("{n} does not divide the group order {order}")]
    NotADivisor { n: u64, order: u64 },
    #[error("gcd({a}, {m}) != 1")]
    NotCoprime { a: u64, m: u64 },
    #[error("expansion basis is linearly dependent over the quadratic subfield")]
    DependentBasis,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for violated preconditions, 3 for
    /// exhausted work budgets, 1 for anything that indicates a broken build.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_) => 3,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
