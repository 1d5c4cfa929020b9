//! Exhaustive enumeration of independent sets, used as the reference oracle.

use fairrep_core::{GraphKind, Rational, VertexPartition};

use crate::IntervalError;

/// Vertex-count caps for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Paths and cycles.
    pub linear: usize,
    /// Cycle powers.
    pub power: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self { linear: 24, power: 20 }
    }
}

fn check_cap(instance: &VertexPartition, caps: OracleCaps) -> Result<(), IntervalError> {
    let cap = match instance.kind() {
        GraphKind::Path | GraphKind::Cycle => caps.linear,
        GraphKind::PowerCycle => caps.power,
    };
    if instance.n() > cap {
        return Err(IntervalError::CapExceeded { n: instance.n(), cap });
    }
    Ok(())
}

/// Calls `visit` once per independent set (members ascending), including the empty set.
pub fn for_each_independent_set(
    instance: &VertexPartition,
    caps: OracleCaps,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), IntervalError> {
    check_cap(instance, caps)?;
    let n = instance.n();
    let s = instance.s();
    let cyclic = instance.is_cyclic();
    let mut cur = Vec::with_capacity(n);
    fn rec(
        v: usize,
        n: usize,
        s: usize,
        cyclic: bool,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if v >= n {
            visit(cur);
            return;
        }
        let fits_prev = cur.last().is_none_or(|&u| v - u >= s);
        let fits_wrap = !cyclic || cur.first().is_none_or(|&f| n - v + f >= s);
        if fits_prev && fits_wrap {
            cur.push(v);
            rec(v + 1, n, s, cyclic, cur, visit);
            cur.pop();
        }
        rec(v + 1, n, s, cyclic, cur, visit);
    }
    rec(0, n, s, cyclic, &mut cur, &mut visit);
    Ok(())
}

/// `Σ_i max(0, |V_i| − β·count_i)`, i.e. `β · Σ b_i` as an integer.
pub(crate) fn scaled_total_deficit(instance: &VertexPartition, sizes: &[usize], set: &[usize]) -> usize {
    let beta = instance.beta();
    let counts = instance.counts(set);
    sizes.iter().zip(&counts).map(|(&sz, &c)| sz.saturating_sub(beta * c)).sum()
}

/// Independent set minimizing `Σ b_i`, ties broken by the lexicographically
/// smallest member list, together with the optimum.
pub fn oracle_optimum(
    instance: &VertexPartition,
    caps: OracleCaps,
) -> Result<(Vec<usize>, Rational), IntervalError> {
    let sizes = instance.class_sizes();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for_each_independent_set(instance, caps, |set| {
        let score = scaled_total_deficit(instance, &sizes, set);
        let better = match &best {
            None => true,
            Some((b, bs)) => score < *b || (score == *b && set < bs.as_slice()),
        };
        if better {
            best = Some((score, set.to_vec()));
        }
    })?;
    let (score, set) = best.expect("the empty set is always independent");
    Ok((set, Rational::new(score as i64, instance.beta() as i64)))
}

/// Every independent set accepted by `pred`, in lexicographic order.
pub fn oracle_all(
    instance: &VertexPartition,
    caps: OracleCaps,
    pred: impl Fn(&[usize]) -> bool,
) -> Result<Vec<Vec<usize>>, IntervalError> {
    let mut out = Vec::new();
    for_each_independent_set(instance, caps, |set| {
        if pred(set) {
            out.push(set.to_vec());
        }
    })?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_optimum_is_one_half() {
        let p = VertexPartition::path(&[1, 1, 2, 1]).unwrap();
        let (set, opt) = oracle_optimum(&p, OracleCaps::default()).unwrap();
        assert_eq!(opt, Rational::new(1, 2));
        assert_eq!(set, vec![0, 2]);
    }

    #[test]
    fn c5_single_class_max_size_two() {
        let c = VertexPartition::cycle(&[1; 5]).unwrap();
        let all = oracle_all(&c, OracleCaps::default(), |_| true).unwrap();
        assert_eq!(all.iter().map(Vec::len).max(), Some(2));
        assert_eq!(all.len(), 11);
    }

    #[test]
    fn counts_match_fibonacci_and_lucas() {
        // Independent sets of P_n number F(n+2); of C_n, the Lucas number L(n).
        let fib = |k: usize| (0..k).fold((0u64, 1u64), |(a, b), _| (b, a + b)).0;
        for n in 3..16 {
            let p = VertexPartition::path(&vec![1; n]).unwrap();
            let c = VertexPartition::cycle(&vec![1; n]).unwrap();
            let mut np = 0u64;
            let mut nc = 0u64;
            for_each_independent_set(&p, OracleCaps::default(), |_| np += 1).unwrap();
            for_each_independent_set(&c, OracleCaps::default(), |_| nc += 1).unwrap();
            assert_eq!(np, fib(n + 2));
            assert_eq!(nc, fib(n - 1) + fib(n + 1));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let p = VertexPartition::path(&[1; 25]).unwrap();
        assert_eq!(
            oracle_optimum(&p, OracleCaps::default()),
            Err(IntervalError::CapExceeded { n: 25, cap: 24 })
        );
        let q = VertexPartition::power_cycle(4, &[1; 21]).unwrap();
        assert!(matches!(oracle_optimum(&q, OracleCaps::default()), Err(IntervalError::CapExceeded { .. })));
    }

    #[test]
    fn power_cycle_sets_respect_spacing() {
        let q = VertexPartition::power_cycle(4, &[1; 12]).unwrap();
        let all = oracle_all(&q, OracleCaps::default(), |_| true).unwrap();
        assert!(all.iter().all(|s| q.is_independent(s)));
        assert_eq!(all.iter().map(Vec::len).max(), Some(3));
    }
}
