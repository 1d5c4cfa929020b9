//! Two disjoint independent transversals of a cycle partitioned into triples.

use fairrep_core::{GraphKind, IndependentSet, VertexPartition};

use crate::IntervalError;

/// Two disjoint independent sets of `C_{3k}`, each meeting every triple once.
///
/// Backtracking: every triple sends one vertex to each set. The next triple
/// to branch on is the one with the fewest options left; options are tried in
/// lexicographic order and the search backtracks as soon as some triple has none.
pub fn solve_dhw(instance: &VertexPartition) -> Result<(IndependentSet, IndependentSet), IntervalError> {
    if instance.kind() != GraphKind::Cycle {
        return Err(IntervalError::PreconditionViolation(format!(
            "expected a cycle, got {:?}",
            instance.kind()
        )));
    }
    let n = instance.n();
    let k = instance.m();
    let sizes = instance.class_sizes();
    if n != 3 * k || sizes.iter().any(|&x| x != 3) {
        return Err(IntervalError::PreconditionViolation(format!(
            "every class must have exactly 3 vertices, got sizes {sizes:?}"
        )));
    }
    let triples: Vec<Vec<usize>> = (0..k).map(|c| instance.members_of(c)).collect();
    let mut options: Vec<(usize, usize)> = Vec::with_capacity(6);
    for x in 0..3 {
        for y in 0..3 {
            if x != y {
                options.push((x, y));
            }
        }
    }
    // side[v]: 0 unused, 1 in the first set, 2 in the second.
    let mut side = vec![0u8; n];
    let mut chosen: Vec<Option<(usize, usize)>> = vec![None; k];
    let ok = |side: &[u8], v: usize, which: u8| {
        side[(v + 1) % n] != which && side[(v + n - 1) % n] != which
    };
    fn rec(
        triples: &[Vec<usize>],
        options: &[(usize, usize)],
        side: &mut Vec<u8>,
        chosen: &mut Vec<Option<(usize, usize)>>,
        ok: &dyn Fn(&[u8], usize, u8) -> bool,
    ) -> bool {
        let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
        for (t, tri) in triples.iter().enumerate() {
            if chosen[t].is_some() {
                continue;
            }
            let live: Vec<(usize, usize)> = options
                .iter()
                .copied()
                .filter(|&(x, y)| ok(side, tri[x], 1) && ok(side, tri[y], 2))
                .collect();
            if live.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|(_, b)| live.len() < b.len()) {
                best = Some((t, live));
            }
        }
        let Some((t, live)) = best else { return true };
        for (x, y) in live {
            let (a, b) = (triples[t][x], triples[t][y]);
            side[a] = 1;
            side[b] = 2;
            chosen[t] = Some((x, y));
            if rec(triples, options, side, chosen, ok) {
                return true;
            }
            side[a] = 0;
            side[b] = 0;
            chosen[t] = None;
        }
        false
    }
    if !rec(&triples, &options, &mut side, &mut chosen, &ok) {
        return Err(IntervalError::Internal(format!(
            "no pair of transversals for {:?}",
            instance.one_based_labels()
        )));
    }
    let first = (0..n).filter(|&v| side[v] == 1).collect();
    let second = (0..n).filter(|&v| side[v] == 2).collect();
    Ok((IndependentSet::new(instance, first)?, IndependentSet::new(instance, second)?))
}
