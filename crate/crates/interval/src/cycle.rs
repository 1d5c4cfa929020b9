//! Cycles: exact per-class counts and the individual bound `b_i ≤ 1`.

use fairrep_core::{interval_report, GraphKind, IndependentSet, Report, VertexPartition};

use crate::cyclic::exact_counts_after_deletion;
use crate::IntervalError;

fn require_cycle(instance: &VertexPartition) -> Result<(), IntervalError> {
    if instance.kind() != GraphKind::Cycle {
        return Err(IntervalError::PreconditionViolation(format!(
            "expected a cycle, got {:?}",
            instance.kind()
        )));
    }
    Ok(())
}

/// Targets implied by the class sizes: `(|V_i| − 1)/2` for `i < m` and
/// `|V_m|/2` for the last class. Fails unless the earlier classes are odd and
/// the last one is even.
pub fn cycle_exact_targets(instance: &VertexPartition) -> Result<Vec<usize>, IntervalError> {
    require_cycle(instance)?;
    let sizes = instance.class_sizes();
    let m = sizes.len();
    sizes
        .iter()
        .enumerate()
        .map(|(i, &sz)| {
            let want_odd = i + 1 < m;
            if (sz % 2 == 1) == want_odd {
                Ok(sz / 2)
            } else {
                Err(IntervalError::PreconditionViolation(format!(
                    "class {} has size {sz}; expected an {} size",
                    i + 1,
                    if want_odd { "odd" } else { "even" }
                )))
            }
        })
        .collect()
}

/// Independent set with exactly `targets[i]` vertices in class `i`, where
/// `|V_i| = 2 r_i + 1` for `i < m` and `|V_m| = 2 r_m`. Lexicographically
/// smallest among all such sets.
pub fn solve_cycle_exact(instance: &VertexPartition, targets: &[usize]) -> Result<IndependentSet, IntervalError> {
    let implied = cycle_exact_targets(instance)?;
    if targets != implied.as_slice() {
        return Err(IntervalError::PreconditionViolation(format!(
            "targets {:?} do not match class sizes {:?}",
            targets,
            instance.class_sizes()
        )));
    }
    let n = instance.n();
    let set = if instance.m() == 1 {
        (0..n).step_by(2).collect()
    } else {
        exact_counts_after_deletion(instance.classes(), &vec![false; n], 2, targets)?.ok_or_else(|| {
            IntervalError::Internal(format!("no exact-count set for {:?}", instance.one_based_labels()))
        })?
    };
    Ok(IndependentSet::new(instance, set)?)
}

/// Vertices removed before solving on the shorter cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    /// Removed vertices (0-based, in removal order).
    pub deleted: Vec<usize>,
    /// Class that keeps half of its (reduced) size, if any class is even after removal.
    pub designated: Option<usize>,
    /// Exact counts requested on the shorter cycle.
    pub targets: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct IndividualSolution {
    pub set: IndependentSet,
    pub report: Report,
    pub contraction: Contraction,
}

/// Independent set with `b_i ≤ 1` for every class, avoiding `avoid` if given.
///
/// One even class keeps `|V_i|/2`; every other even class loses its lowest
/// vertex and then gets `|V_i|/2 − 1`; odd classes get `(|V_i| − 1)/2`. When
/// every class is odd the lowest vertex (or `avoid`) is removed first.
pub fn solve_cycle_individual(
    instance: &VertexPartition,
    avoid: Option<usize>,
) -> Result<IndividualSolution, IntervalError> {
    require_cycle(instance)?;
    let n = instance.n();
    let m = instance.m();
    if let Some(v) = avoid {
        if v >= n {
            return Err(IntervalError::PreconditionViolation(format!(
                "vertex {} is outside the cycle of length {n}",
                v + 1
            )));
        }
    }
    let labels = instance.classes();
    let mut deleted = vec![false; n];
    let mut order = Vec::new();
    let mut size = instance.class_sizes();
    let mut remove = |v: usize, deleted: &mut Vec<bool>, size: &mut Vec<usize>| {
        deleted[v] = true;
        size[labels[v]] -= 1;
        order.push(v);
    };
    if let Some(v) = avoid {
        remove(v, &mut deleted, &mut size);
    }
    let lowest_in = |c: usize, deleted: &[bool]| (0..n).find(|&u| !deleted[u] && labels[u] == c);
    let even = |size: &[usize]| (0..m).filter(|&c| size[c] > 0 && size[c].is_multiple_of(2)).collect::<Vec<_>>();
    while even(&size).is_empty() && size.iter().any(|&x| x > 0) {
        let preferred = avoid.map(|v| labels[v]).filter(|&c| size[c] > 0);
        let c = preferred.unwrap_or_else(|| labels[(0..n).find(|&u| !deleted[u]).expect("vertices remain")]);
        let u = lowest_in(c, &deleted).expect("class is nonempty");
        remove(u, &mut deleted, &mut size);
    }
    let evens = even(&size);
    let designated = avoid
        .map(|v| labels[v])
        .filter(|c| evens.contains(c))
        .or_else(|| evens.first().copied());
    for &c in &evens {
        if Some(c) != designated {
            let u = lowest_in(c, &deleted).expect("class is nonempty");
            remove(u, &mut deleted, &mut size);
        }
    }
    let targets: Vec<usize> = size.iter().map(|&x| x / 2).collect();
    let set = exact_counts_after_deletion(labels, &deleted, 2, &targets)?.ok_or_else(|| {
        IntervalError::Internal(format!(
            "no exact-count set after removing {:?} from {:?}",
            order.iter().map(|v| v + 1).collect::<Vec<_>>(),
            instance.one_based_labels()
        ))
    })?;
    let report = interval_report(instance, &set)?;
    Ok(IndividualSolution {
        set: IndependentSet::new(instance, set)?,
        report,
        contraction: Contraction { deleted: order, designated, targets },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_all, OracleCaps};
    use fairrep_core::Rational;

    #[test]
    fn c5_three_plus_two() {
        let c = VertexPartition::cycle(&[1, 1, 1, 2, 2]).unwrap();
        let s = solve_cycle_exact(&c, &[1, 1]).unwrap();
        assert_eq!(c.counts(s.members()), vec![1, 1]);
        assert_eq!(s.to_one_based(), vec![1, 4]);
    }

    #[test]
    fn single_even_class_alternates() {
        let c = VertexPartition::cycle(&[1; 8]).unwrap();
        assert_eq!(solve_cycle_exact(&c, &[4]).unwrap().members(), &[0, 2, 4, 6]);
    }

    #[test]
    fn rejects_wrong_targets_and_sizes() {
        let c = VertexPartition::cycle(&[1, 1, 1, 2, 2]).unwrap();
        assert!(matches!(solve_cycle_exact(&c, &[1, 0]), Err(IntervalError::PreconditionViolation(_))));
        let d = VertexPartition::cycle(&[1, 1, 2, 2]).unwrap();
        assert!(matches!(cycle_exact_targets(&d), Err(IntervalError::PreconditionViolation(_))));
        let p = VertexPartition::path(&[1, 1, 1, 2, 2]).unwrap();
        assert!(solve_cycle_exact(&p, &[1, 1]).is_err());
    }

    #[test]
    fn c6_consecutive_pairs() {
        let c = VertexPartition::cycle(&[1, 1, 2, 2, 3, 3]).unwrap();
        let sol = solve_cycle_individual(&c, None).unwrap();
        assert!(sol.report.deficits.iter().all(|d| *d <= Rational::from_integer(1)));
        let best = oracle_all(&c, OracleCaps::default(), |s| c.counts(s).iter().all(|&x| x == 1)).unwrap();
        assert!(!best.is_empty());
    }

    #[test]
    fn avoid_is_respected() {
        let c = VertexPartition::cycle(&[1, 1, 1, 2, 2, 2, 3, 3, 3]).unwrap();
        for v in 0..9 {
            let sol = solve_cycle_individual(&c, Some(v)).unwrap();
            assert!(!sol.set.members().contains(&v));
            assert_eq!(c.counts(sol.set.members()), vec![1, 1, 1]);
        }
    }

    #[test]
    fn tiny_cycles() {
        for labels in [[1, 2, 3], [1, 1, 1], [1, 1, 2]] {
            let c = VertexPartition::cycle(&labels).unwrap();
            let sol = solve_cycle_individual(&c, None).unwrap();
            assert!(sol.report.deficits.iter().all(|d| *d <= Rational::from_integer(1)));
        }
    }
}
