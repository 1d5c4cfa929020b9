use fairrep_bipartite2::Bip2Error;
use fairrep_core::CoreError;
use fairrep_interval::IntervalError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("exhaustive family of about {estimate} instances exceeds the budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("counterexample failed re-verification: {0}")]
    Unverified(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Bipartite2(#[from] Bip2Error),
}
