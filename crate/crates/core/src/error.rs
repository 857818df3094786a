use thiserror::Error;

use crate::kostant::PbwMonomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root type `{0}` (expected A1 or A2)")]
    UnsupportedType(String),

    #[error("parameters outside the supported envelope: {0}")]
    OutOfEnvelope(String),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    /// A monomial outside the restricted range survived reduction mod p.
    #[error("closure violation: {monomial} survives mod {p} with coefficient {coefficient}")]
    ClosureViolation {
        monomial: PbwMonomial,
        p: u32,
        coefficient: u32,
    },

    #[error("coefficient {coefficient} of {monomial} is not integral")]
    NotIntegral {
        monomial: PbwMonomial,
        coefficient: String,
    },

    #[error("weight space {0} is zero")]
    EmptyWeightSpace(String),

    #[error("no singular algebra element found within {trials} trials (dimension {dimension})")]
    InconclusiveAfterBudget { trials: usize, dimension: usize },

    #[error("character solve failed: {0}")]
    NonIntegralSolve(String),

    #[error("search budget of {budget} closures exceeded after {tried} tried; largest closure found has dimension {best_dimension}")]
    BudgetExceeded { budget: usize, tried: usize, best_dimension: usize },

    #[error("cache mismatch: {0}")]
    CacheMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
