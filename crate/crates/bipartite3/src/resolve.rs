//! Turning three mutually adjacent permutations that together exceed every
//! quota into a permutation with all `|d_ℓ| ≤ 1`.

use fairrep_core::{distance_unchecked, Permutation};
use serde::Serialize;

use crate::{Balanced, Bip3Error};

/// How the resolution step found its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolveRoute {
    /// One of the three inputs already qualifies.
    Direct,
    /// Every part is exceeded by at least 2; a transposition inside a
    /// pairwise disagreement set qualifies.
    DiagonalTwo,
    /// A transposition inside the disagreement set of the pair qualifies.
    Transposition,
    /// Rearranging the disagreement set plus 1 or 2 further rows qualifies.
    Bullet(u8),
    /// Exhaustive search within distance 5 of an input.
    SafetyNet,
}

/// Every permutation agreeing with `base` outside `positions`.
fn rearrange(base: &Permutation, positions: &[usize], mut f: impl FnMut(&Permutation) -> bool) -> Option<Permutation> {
    let values: Vec<usize> = positions.iter().map(|&p| base.get(p)).collect();
    let mut order = Permutation::identity(positions.len());
    let mut map = base.as_slice().to_vec();
    loop {
        for (k, &p) in positions.iter().enumerate() {
            map[p] = values[order.get(k)];
        }
        let cand = Permutation::new(map.clone()).expect("rearranged bijection");
        if f(&cand) {
            return Some(cand);
        }
        if !order.next_lex() {
            return None;
        }
    }
}

/// k-subsets of `0..n` avoiding `skip`, in lexicographic order.
fn subsets(n: usize, k: usize, skip: &[usize]) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..n).filter(|x| !skip.contains(x)).collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > pool.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + pool.len() - k) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Resolves `tri`, three pairwise `∼` permutations such that for every part
/// `ℓ` some member has `d_ℓ > 0`.
pub fn resolve_triangle(m: &Balanced, tri: &[Permutation; 3]) -> Result<(Permutation, ResolveRoute), Bip3Error> {
    let n = m.n();
    for a in 0..3 {
        if tri[a].len() != n {
            return Err(Bip3Error::PreconditionViolation(format!("{} is not on {n} points", tri[a])));
        }
        for b in a + 1..3 {
            if distance_unchecked(&tri[a], &tri[b]) > 3 {
                return Err(Bip3Error::PreconditionViolation(format!("{} and {} are not adjacent", tri[a], tri[b])));
            }
        }
    }
    let ds: Vec<[i64; 3]> = tri.iter().map(|p| m.d(p)).collect();
    let best: Vec<i64> = (0..3).map(|l| ds.iter().map(|d| d[l]).max().expect("three members")).collect();
    if best.iter().any(|&x| x <= 0) {
        return Err(Bip3Error::PreconditionViolation(format!("triangle with d = {ds:?} is not rainbow")));
    }
    if let Some(p) = tri.iter().find(|p| m.is_solution(p)) {
        return Ok((p.clone(), ResolveRoute::Direct));
    }
    let ok = |p: &Permutation| m.is_solution(p);
    let transposition_in = |p: &Permutation, set: &[usize]| {
        for (x, &i) in set.iter().enumerate() {
            for &j in &set[x + 1..] {
                let q = p.swap_images(i, j);
                if ok(&q) {
                    return Some(q);
                }
            }
        }
        None
    };
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let route = if best.iter().all(|&x| x >= 2) { ResolveRoute::DiagonalTwo } else { ResolveRoute::Transposition };
    for &(a, b) in &pairs {
        let set = tri[a].disagreements(&tri[b]);
        for p in tri {
            if let Some(q) = transposition_in(p, &set) {
                return Ok((q, route));
            }
        }
    }
    for extra in 1..=2u8 {
        for &(a, b) in &pairs {
            for base in [a, b] {
                let set = tri[a].disagreements(&tri[b]);
                for more in subsets(n, extra as usize, &set) {
                    let mut pos = set.clone();
                    pos.extend(more);
                    if let Some(q) = rearrange(&tri[base], &pos, ok) {
                        return Ok((q, ResolveRoute::Bullet(extra)));
                    }
                }
            }
        }
    }
    for p in tri {
        for pos in subsets(n, 5.min(n), &[]) {
            if let Some(q) = rearrange(p, &pos, ok) {
                return Ok((q, ResolveRoute::SafetyNet));
            }
        }
    }
    Err(Bip3Error::SearchExhausted(format!("nothing within distance 5 of {}, {}, {}", tri[0], tri[1], tri[2])))
}
