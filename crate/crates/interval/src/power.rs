//! Powers of cycles `C_n^{s−1}` with `s` a power of two.

use fairrep_core::{interval_report, GraphKind, IndependentSet, Report, VertexPartition};

use crate::cyclic::exact_counts_after_deletion;
use crate::IntervalError;

/// Counts guaranteed for each class: `⌊(|V_i| − s + 1)/s⌋` (at least 0) for
/// `i < m` and `⌊|V_m|/s⌋` for the last class.
pub fn power_cycle_targets(instance: &VertexPartition) -> Vec<usize> {
    let s = instance.s();
    let sizes = instance.class_sizes();
    let m = sizes.len();
    sizes
        .iter()
        .enumerate()
        .map(|(i, &a)| if i + 1 == m { a / s } else { (a + 1).saturating_sub(s) / s })
        .collect()
}

#[derive(Debug, Clone)]
pub struct PowerSolution {
    pub set: IndependentSet,
    pub report: Report,
    pub targets: Vec<usize>,
    /// Vertices removed to reach the reduced class sizes (0-based, ascending).
    pub deleted: Vec<usize>,
}

/// Independent set of `C_n^{s−1}` (cyclic gaps at least `s`) meeting
/// [`power_cycle_targets`] exactly.
///
/// Each class `i < m` is cut down to `s·t_i + s − 1` vertices (or removed
/// entirely when smaller than `s − 1`) and the last class to `s·t_m`, always
/// dropping the lowest-indexed vertices; the exact-count search then runs on
/// the shorter cycle and its answer is lifted back.
pub fn solve_power_cycle(instance: &VertexPartition) -> Result<PowerSolution, IntervalError> {
    if instance.kind() != GraphKind::PowerCycle {
        return Err(IntervalError::PreconditionViolation(format!(
            "expected a power of a cycle, got {:?}",
            instance.kind()
        )));
    }
    let s = instance.s();
    if !s.is_power_of_two() {
        return Err(IntervalError::PreconditionViolation(format!("s = {s} is not a power of 2")));
    }
    let n = instance.n();
    let m = instance.m();
    let targets = power_cycle_targets(instance);
    let sizes = instance.class_sizes();
    let labels = instance.classes();
    let mut deleted = vec![false; n];
    for c in 0..m {
        let keep = if c + 1 == m {
            s * targets[c]
        } else if sizes[c] + 1 < s {
            0
        } else {
            s * targets[c] + s - 1
        };
        let mut drop = sizes[c] - keep;
        for v in 0..n {
            if drop == 0 {
                break;
            }
            if labels[v] == c {
                deleted[v] = true;
                drop -= 1;
            }
        }
    }
    let set = exact_counts_after_deletion(labels, &deleted, s, &targets)?.ok_or_else(|| {
        IntervalError::Internal(format!(
            "no spacing-{s} set with counts {targets:?} for {:?}",
            instance.one_based_labels()
        ))
    })?;
    let report = interval_report(instance, &set)?;
    Ok(PowerSolution {
        set: IndependentSet::new(instance, set)?,
        report,
        targets,
        deleted: (0..n).filter(|&v| deleted[v]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::solve_cycle_exact;
    use crate::oracle::{oracle_all, OracleCaps};

    #[test]
    fn rejects_non_powers_of_two() {
        let q = VertexPartition::power_cycle(3, &[1; 9]).unwrap();
        assert!(matches!(solve_power_cycle(&q), Err(IntervalError::PreconditionViolation(_))));
    }

    #[test]
    fn single_class_spacing_four() {
        for r in 1..5 {
            let q = VertexPartition::power_cycle(4, &vec![1; 4 * r]).unwrap();
            let sol = solve_power_cycle(&q).unwrap();
            assert_eq!(sol.set.len(), r);
            assert!(q.is_independent(sol.set.members()));
        }
    }

    #[test]
    fn n17_sizes_11_and_6() {
        let labels: Vec<usize> = (0..17).map(|v| if v % 3 == 0 && v < 18 && v / 3 < 6 { 2 } else { 1 }).collect();
        let q = VertexPartition::power_cycle(4, &labels).unwrap();
        assert_eq!(q.class_sizes(), vec![11, 6]);
        assert_eq!(power_cycle_targets(&q), vec![2, 1]);
        let sol = solve_power_cycle(&q).unwrap();
        assert_eq!(q.counts(sol.set.members()), vec![2, 1]);
        let exists = oracle_all(&q, OracleCaps::default(), |s| q.counts(s) == [2, 1]).unwrap();
        assert!(!exists.is_empty());
    }

    #[test]
    fn s2_matches_cycle_exact() {
        let labels = [1, 2, 1, 3, 3, 1, 2, 2, 3, 3];
        let q = VertexPartition::power_cycle(2, &labels).unwrap();
        let c = VertexPartition::cycle(&labels).unwrap();
        let sol = solve_power_cycle(&q).unwrap();
        assert!(sol.deleted.is_empty());
        assert_eq!(sol.set.members(), solve_cycle_exact(&c, &[1, 1, 2]).unwrap().members());
    }
}
