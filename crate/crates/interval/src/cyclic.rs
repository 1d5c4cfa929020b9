//! Exact-count selection on a cyclic sequence with a minimum cyclic gap.

use crate::IntervalError;

/// Largest `positions × count states` table the DP will allocate per first position.
pub(crate) const DP_BUDGET: u128 = 50_000_000;

/// Lexicographically smallest set of positions of the cyclic sequence `classes`
/// whose pairwise cyclic gaps are at least `s` and which holds exactly
/// `targets[c]` positions of class `c`. `None` when no such set exists.
///
/// The first chosen position `f` is fixed in an outer loop (ascending); the
/// remaining choices lie in `f+s ..= f+L−s` and form a linear problem solved
/// by a backward feasibility table over `(position, capped count vector)`.
pub(crate) fn exact_counts_cyclic(
    classes: &[usize],
    s: usize,
    targets: &[usize],
) -> Result<Option<Vec<usize>>, IntervalError> {
    let len = classes.len();
    let total: usize = targets.iter().sum();
    if total == 0 {
        return Ok(Some(Vec::new()));
    }
    let m = targets.len();
    let mut have = vec![0usize; m];
    for &c in classes {
        have[c] += 1;
    }
    if (0..m).any(|c| have[c] < targets[c]) || total * s > len.max(s) {
        return Ok(None);
    }
    // Mixed-radix index of count vectors `0..=targets[c]`.
    let mut radix = vec![1usize; m];
    let mut states: u128 = 1;
    for c in 0..m {
        radix[c] = states as usize;
        states *= targets[c] as u128 + 1;
    }
    let estimate = states * len as u128;
    if estimate > DP_BUDGET {
        return Err(IntervalError::SearchTooLarge { estimate, budget: DP_BUDGET });
    }
    let states = states as usize;
    let full: usize = (0..m).map(|c| targets[c] * radix[c]).sum();

    for f in 0..len {
        let cf = classes[f];
        if targets[cf] == 0 {
            continue;
        }
        let start_state = radix[cf];
        let lo = f + s;
        // The last chosen position ℓ needs f + len − ℓ ≥ s.
        let hi = (len - 1).min((f + len).saturating_sub(s));
        if start_state == full {
            return Ok(Some(vec![f]));
        }
        if lo > hi {
            continue;
        }
        let width = hi - lo + 1;
        // feas[(p - lo) * states + st]: from position p on, counts `st` can be completed.
        let mut feas = vec![false; width * states];
        let at = |feas: &Vec<bool>, p: usize, st: usize| -> bool {
            if p > hi {
                st == full
            } else {
                feas[(p - lo) * states + st]
            }
        };
        for p in (lo..=hi).rev() {
            let c = classes[p];
            for st in 0..states {
                let cnt = (st / radix[c]) % (targets[c] + 1);
                let v = st == full
                    || at(&feas, p + 1, st)
                    || (cnt < targets[c] && at(&feas, p + s, st + radix[c]));
                feas[(p - lo) * states + st] = v;
            }
        }
        if !at(&feas, lo, start_state) {
            continue;
        }
        let mut out = vec![f];
        let mut st = start_state;
        let mut p = lo;
        while st != full {
            let c = classes[p];
            let cnt = (st / radix[c]) % (targets[c] + 1);
            if cnt < targets[c] && at(&feas, p + s, st + radix[c]) {
                out.push(p);
                st += radix[c];
                p += s;
            } else {
                p += 1;
            }
        }
        return Ok(Some(out));
    }
    Ok(None)
}

/// Runs [`exact_counts_cyclic`] on the cycle left after deleting the vertices
/// flagged in `deleted`, and lifts the result back to original vertex indices.
pub(crate) fn exact_counts_after_deletion(
    labels: &[usize],
    deleted: &[bool],
    s: usize,
    targets: &[usize],
) -> Result<Option<Vec<usize>>, IntervalError> {
    let table: Vec<usize> = (0..labels.len()).filter(|&v| !deleted[v]).collect();
    let reduced: Vec<usize> = table.iter().map(|&v| labels[v]).collect();
    Ok(exact_counts_cyclic(&reduced, s, targets)?.map(|set| set.into_iter().map(|p| table[p]).collect()))
}
