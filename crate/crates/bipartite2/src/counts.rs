//! Extreme counts, exact counts and almost-fair matchings for two parts.

use std::collections::{HashSet, VecDeque};

use fairrep_core::{assignment::max_weight_assignment, bipartite_report, ColorMatrix, Permutation, Report};

use crate::oracle::first_with_count;
use crate::rigidity::{check_rigidity, rigid_achievable};
use crate::{f_size, in_f, require_two_parts, Bip2Error};

/// Largest `n` for the exhaustive fallback of [`exact_count_matching`].
pub const EXHAUSTIVE_FALLBACK_CAP: usize = 8;
/// Visited-node cap for the local search of [`exact_count_matching`].
pub const BFS_NODE_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremes {
    pub c_min: usize,
    pub c_max: usize,
    pub min_witness: Permutation,
    pub max_witness: Permutation,
}

/// Least and greatest `|P ∩ F|` over perfect matchings, by exact assignment.
pub fn extreme_counts(a: &ColorMatrix) -> Result<Extremes, Bip2Error> {
    require_two_parts(a)?;
    let n = a.n();
    let (max_witness, c_max) = max_weight_assignment(n, |i, j| i64::from(in_f(a, i, j)));
    let (min_witness, outside) = max_weight_assignment(n, |i, j| i64::from(!in_f(a, i, j)));
    Ok(Extremes { c_min: n - outside as usize, c_max: c_max as usize, min_witness, max_witness })
}

/// How [`exact_count_matching`] found its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// On the transposition walk between the extreme witnesses.
    Walk,
    /// Local search in the `∼`-graph around a jump of the walk.
    Bfs,
    /// Lexicographic enumeration of all matchings.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatch {
    pub perm: Permutation,
    pub route: Route,
}

/// Permutations at Hamming distance 2 or 3 from `p`.
fn neighbors(p: &Permutation) -> Vec<Permutation> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(p.swap_images(i, j));
            for k in j + 1..n {
                out.push(p.swap_images(i, j).swap_images(j, k));
                out.push(p.swap_images(i, k).swap_images(j, k));
            }
        }
    }
    out
}

fn bfs(a: &ColorMatrix, start: &Permutation, c: usize) -> Option<Permutation> {
    let n = a.n();
    let lo = c.saturating_sub(1);
    let hi = c + 1;
    let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    while let Some((p, depth)) = queue.pop_front() {
        if depth == 2 * n {
            continue;
        }
        for q in neighbors(&p) {
            let cq = a.count_part(&q, 0);
            if cq < lo || cq > hi || seen.contains(&q) {
                continue;
            }
            if cq == c {
                return Some(q);
            }
            if seen.len() >= BFS_NODE_CAP {
                return None;
            }
            seen.insert(q.clone());
            queue.push_back((q, depth + 1));
        }
    }
    None
}

/// A perfect matching with exactly `c` edges in `F`.
///
/// Walks from the minimum witness to the maximum witness, each step fixing the
/// smallest disagreeing row by swapping two images, and returns the first
/// matching with count `c`. If the walk skips `c`, a bounded search in the
/// `∼`-graph starts from the skip point; for `n ≤ 8` full enumeration is the
/// last resort and also certifies [`Bip2Error::Infeasible`].
///
/// Non-rigid sets can still miss a count strictly between the extremes: the
/// anti-diagonal of `n = 3` is met by 0, 1 or 3 edges but never by 2.
pub fn exact_count_matching(a: &ColorMatrix, c: usize) -> Result<ExactMatch, Bip2Error> {
    let ext = extreme_counts(a)?;
    if c < ext.c_min || c > ext.c_max {
        return Err(Bip2Error::OutOfRange { c, c_min: ext.c_min, c_max: ext.c_max });
    }
    let cert = check_rigidity(a)?;
    if let (Some(k), Some(l)) = (&cert.k, &cert.l) {
        let achievable = rigid_achievable(a.n(), k.len(), l.len());
        if !achievable.contains(&c) {
            return Err(Bip2Error::RigidInfeasible { achievable });
        }
    }
    let target = &ext.max_witness;
    let mut cur = ext.min_witness.clone();
    let mut count = a.count_part(&cur, 0);
    let mut jump = None;
    loop {
        if count == c {
            return Ok(ExactMatch { perm: cur, route: Route::Walk });
        }
        let Some(&i) = cur.disagreements(target).first() else { break };
        let j = cur.inverse().get(target.get(i));
        let next = cur.swap_images(i, j);
        let next_count = a.count_part(&next, 0);
        debug_assert!(count.abs_diff(next_count) <= 2, "a transposition changes the count by at most 2");
        if jump.is_none() && count < c && next_count > c {
            jump = Some(cur.clone());
        }
        cur = next;
        count = next_count;
    }
    if let Some(start) = jump {
        if let Some(p) = bfs(a, &start, c) {
            return Ok(ExactMatch { perm: p, route: Route::Bfs });
        }
    }
    if a.n() <= EXHAUSTIVE_FALLBACK_CAP {
        return match first_with_count(a, c) {
            Some(p) => Ok(ExactMatch { perm: p, route: Route::Exhaustive }),
            None => Err(Bip2Error::Infeasible { c }),
        };
    }
    Err(Bip2Error::SearchExhausted(format!("count {c} on n = {}", a.n())))
}

#[derive(Debug, Clone)]
pub struct AlmostFair {
    pub perm: Permutation,
    pub report: Report,
    /// Whether both parts meet `⌊|E_ℓ|/n⌋` (false only for rigid `F` with `n | |F|`).
    pub fair: bool,
}

/// A matching with `|N ∩ F| ≥ ⌊|F|/n⌋ − 1` and `|N ∖ F| ≥ ⌊(n² − |F|)/n⌋ − 1`,
/// and without the `−1` unless `F` is rigid and `n` divides `|F|`.
pub fn almost_fair_two(a: &ColorMatrix) -> Result<AlmostFair, Bip2Error> {
    require_two_parts(a)?;
    let n = a.n();
    let f = f_size(a);
    let lo = f / n;
    let hi = f.div_ceil(n);
    let cert = check_rigidity(a)?;
    let (c, fair) = match (&cert.k, &cert.l) {
        (Some(k), Some(l)) => {
            let achievable = rigid_achievable(n, k.len(), l.len());
            match (lo..=hi).find(|c| achievable.contains(c)) {
                Some(c) => (c, true),
                None => {
                    let c = if lo > 0 && achievable.contains(&(lo - 1)) { lo - 1 } else { hi + 1 };
                    (c, false)
                }
            }
        }
        _ => (lo, true),
    };
    let found = exact_count_matching(a, c)?;
    let report = bipartite_report(a, &found.perm)?;
    Ok(AlmostFair { perm: found.perm, report, fair })
}
