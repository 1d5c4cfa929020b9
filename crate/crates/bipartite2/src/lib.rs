//! Two-part edge partitions of `K_{n,n}`. Part 1 of the color matrix plays
//! the role of the edge set `F`; part 2 is its complement.

pub mod counts;
pub mod oracle;
pub mod rigidity;

use fairrep_core::{ColorMatrix, CoreError};
use thiserror::Error;

pub use counts::{almost_fair_two, exact_count_matching, extreme_counts, AlmostFair, ExactMatch, Extremes, Route};
pub use oracle::{achievable_counts_exhaustive, parity_exhaustive, ORACLE_CAP};
pub use rigidity::{check_rigidity, parity_signature, rigid_achievable, Parity, RigidityCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Bip2Error {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("F is rigid; achievable counts are {achievable:?}")]
    RigidInfeasible { achievable: Vec<usize> },
    #[error("count {c} is outside [{c_min}, {c_max}]")]
    OutOfRange { c: usize, c_min: usize, c_max: usize },
    #[error("no perfect matching meets F in exactly {c} edges (checked by enumeration)")]
    Infeasible { c: usize },
    #[error("no matching with the requested count was found: {0}")]
    SearchExhausted(String),
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub(crate) fn require_two_parts(a: &ColorMatrix) -> Result<(), Bip2Error> {
    if a.m() != 2 {
        return Err(Bip2Error::PreconditionViolation(format!("expected 2 parts, got {}", a.m())));
    }
    Ok(())
}

/// `|F| = |E_1|`.
pub(crate) fn f_size(a: &ColorMatrix) -> usize {
    a.sizes()[0]
}

#[inline]
pub(crate) fn in_f(a: &ColorMatrix, i: usize, j: usize) -> bool {
    a.get(i, j) == 0
}
