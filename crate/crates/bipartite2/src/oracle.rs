//! Exhaustive enumeration over all `n!` perfect matchings.

use std::collections::BTreeSet;

use fairrep_core::{ColorMatrix, Permutation};

use crate::{require_two_parts, Bip2Error, Parity};

/// Largest `n` the enumeration accepts.
pub const ORACLE_CAP: usize = 9;

/// Every value of `|P ∩ F|` over all perfect matchings.
pub fn achievable_counts_exhaustive(a: &ColorMatrix) -> Result<BTreeSet<usize>, Bip2Error> {
    require_two_parts(a)?;
    let n = a.n();
    if n > ORACLE_CAP {
        return Err(Bip2Error::CapExceeded { n, cap: ORACLE_CAP });
    }
    let mut out = BTreeSet::new();
    for p in Permutation::all(n) {
        out.insert(a.count_part(&p, 0));
        if out.len() == n + 1 {
            break;
        }
    }
    Ok(out)
}

/// Parity of `|P ∩ F|` decided by enumeration.
pub fn parity_exhaustive(a: &ColorMatrix) -> Result<Parity, Bip2Error> {
    let counts = achievable_counts_exhaustive(a)?;
    let parities: BTreeSet<usize> = counts.iter().map(|c| c % 2).collect();
    Ok(match parities.iter().collect::<Vec<_>>().as_slice() {
        [0] => Parity::Even,
        [1] => Parity::Odd,
        _ => Parity::Mixed,
    })
}

/// First matching in lexicographic order with exactly `c` edges in `F`.
pub(crate) fn first_with_count(a: &ColorMatrix, c: usize) -> Option<Permutation> {
    Permutation::all(a.n()).find(|p| a.count_part(p, 0) == c)
}
