//! Constructive solvers for independent sets meeting per-class quotas in
//! paths, cycles and powers of cycles, plus an exhaustive oracle.

mod cyclic;
pub mod cycle;
pub mod dhw;
pub mod oracle;
pub mod path;
pub mod power;

use fairrep_core::CoreError;
use thiserror::Error;

pub use cycle::{cycle_exact_targets, solve_cycle_exact, solve_cycle_individual, Contraction, IndividualSolution};
pub use dhw::solve_dhw;
pub use oracle::{oracle_all, oracle_optimum, OracleCaps};
pub use path::{solve_path_total, CutPattern, PathOrigin, PathSolution, PATH_SEARCH_BUDGET};
pub use power::{power_cycle_targets, solve_power_cycle, PowerSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("instance has {n} vertices, above the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("search space of about {estimate} states exceeds the budget {budget}")]
    SearchTooLarge { estimate: u128, budget: u128 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
