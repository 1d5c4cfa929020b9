use std::fmt::Display;

use serde::{Serialize, Serializer};

use crate::{ColorMatrix, CoreError, Permutation, Scalar, VertexPartition};

/// Per-class counts, quotas and deficits of a solution.
///
/// Interval instances: `quotas[i] = ⌊|V_i|/β⌋` and `deficits[i] = b_i = max(0, |V_i|/β − count_i)`,
/// the least `b_i ≥ 0` with `count_i ≥ |V_i|/β − b_i`.
///
/// Bipartite instances: `quotas[ℓ] = k_ℓ = |E_ℓ|/n` and `deficits[ℓ] = d_ℓ = count_ℓ − k_ℓ`.
///
/// `total_deficit` sums the shortfalls `max(0, quota_target − count)` in both cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairnessReport<T: Scalar> {
    pub counts: Vec<usize>,
    pub quotas: Vec<T>,
    pub deficits: Vec<T>,
    pub total_deficit: T,
}

impl<T: Scalar> FairnessReport<T> {
    pub fn max_deficit(&self) -> T {
        self.deficits.iter().copied().max().unwrap_or_else(T::zero)
    }

    pub fn max_abs_deficit(&self) -> T {
        self.deficits.iter().map(|d| d.abs()).max().unwrap_or_else(T::zero)
    }
}

pub fn interval_report<T: Scalar>(
    instance: &VertexPartition,
    set: &[usize],
) -> Result<FairnessReport<T>, CoreError> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || !instance.is_independent(&sorted) {
        return Err(CoreError::InvalidSolution(format!(
            "{:?} is not an independent set of the instance",
            sorted.iter().map(|v| v + 1).collect::<Vec<_>>()
        )));
    }
    let beta = instance.beta();
    let counts = instance.counts(&sorted);
    let sizes = instance.class_sizes();
    let quotas = sizes.iter().map(|&s| T::from_count(s / beta)).collect();
    let deficits: Vec<T> = sizes
        .iter()
        .zip(&counts)
        .map(|(&s, &c)| (T::ratio(s, beta) - T::from_count(c)).positive_part())
        .collect();
    let total_deficit = deficits.iter().fold(T::zero(), |acc, &b| acc + b);
    Ok(FairnessReport { counts, quotas, deficits, total_deficit })
}

pub fn bipartite_report<T: Scalar>(
    matrix: &ColorMatrix,
    sigma: &Permutation,
) -> Result<FairnessReport<T>, CoreError> {
    if sigma.len() != matrix.n() {
        return Err(CoreError::DimensionMismatch { left: matrix.n(), right: sigma.len() });
    }
    let n = matrix.n();
    let counts = matrix.counts(sigma);
    let quotas: Vec<T> = matrix.sizes().iter().map(|&e| T::ratio(e, n)).collect();
    let deficits: Vec<T> = counts.iter().zip(&quotas).map(|(&c, &k)| T::from_count(c) - k).collect();
    let total_deficit = deficits.iter().fold(T::zero(), |acc, &d| acc + (-d).positive_part());
    Ok(FairnessReport { counts, quotas, deficits, total_deficit })
}

#[derive(Serialize)]
struct ReportJson<'a> {
    counts: &'a [usize],
    quotas: Vec<String>,
    deficits: Vec<String>,
    total_deficit: String,
}

/// Scalars serialize as strings (`"1/2"`, `"-1"`) so rationals survive JSON exactly.
impl<T: Scalar + Display> Serialize for FairnessReport<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ReportJson {
            counts: &self.counts,
            quotas: self.quotas.iter().map(ToString::to_string).collect(),
            deficits: self.deficits.iter().map(ToString::to_string).collect(),
            total_deficit: self.total_deficit.to_string(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Ratio;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn r(a: i64, b: i64) -> Rational {
        Ratio::new(a, b)
    }

    #[test]
    fn p4_example() {
        let p = VertexPartition::path(&[1, 1, 2, 1]).unwrap();
        let rep: FairnessReport<Rational> = interval_report(&p, &[0, 2]).unwrap();
        assert_eq!(rep.counts, vec![1, 1]);
        assert_eq!(rep.deficits, vec![r(1, 2), r(0, 1)]);
        assert_eq!(rep.quotas, vec![r(1, 1), r(0, 1)]);
        assert_eq!(rep.total_deficit, r(1, 2));
    }

    #[test]
    fn single_class_odd_vertices() {
        for n in 1..12 {
            let p = VertexPartition::path(&vec![1; n]).unwrap();
            let odd: Vec<usize> = (0..n).step_by(2).collect();
            let rep: FairnessReport<Rational> = interval_report(&p, &odd).unwrap();
            assert!(rep.deficits[0] <= r(1, 2));
        }
    }

    #[test]
    fn single_part_matrix() {
        let a = ColorMatrix::from_fn(4, 1, false, |_, _| 0).unwrap();
        let rep: FairnessReport<Rational> = bipartite_report(&a, &Permutation::identity(4)).unwrap();
        assert_eq!(rep.deficits, vec![r(0, 1)]);
        assert_eq!(rep.quotas, vec![r(4, 1)]);
    }

    #[test]
    fn rejects_invalid_solutions() {
        let p = VertexPartition::path(&[1, 1, 2, 1]).unwrap();
        assert!(interval_report::<Rational>(&p, &[0, 1]).is_err());
        let a = ColorMatrix::from_fn(4, 1, false, |_, _| 0).unwrap();
        assert!(bipartite_report::<Rational>(&a, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn serializes_rationals_as_strings() {
        let p = VertexPartition::path(&[1, 1, 2, 1]).unwrap();
        let rep: FairnessReport<Rational> = interval_report(&p, &[0, 2]).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            json,
            r#"{"counts":[1,1],"quotas":["1","0"],"deficits":["1/2","0"],"total_deficit":"1/2"}"#
        );
    }

    #[test]
    fn generic_over_wider_rationals() {
        let p = VertexPartition::path(&[1, 1, 2, 1]).unwrap();
        let rep: FairnessReport<Ratio<i128>> = interval_report(&p, &[0, 2]).unwrap();
        assert_eq!(rep.total_deficit, Ratio::new(1, 2));
    }

    #[test]
    fn deficits_sum_to_zero_for_divisible_parts() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let n = rng.gen_range(2..8);
            // Each row is a rotation of a fixed label word, so every part has size divisible by n.
            let word: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let a = ColorMatrix::from_fn(n, 3, true, |i, j| word[(i + j) % n]).unwrap();
            let mut map: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                map.swap(i, rng.gen_range(0..=i));
            }
            let rep: FairnessReport<Rational> = bipartite_report(&a, &Permutation::new(map).unwrap()).unwrap();
            assert_eq!(rep.deficits.iter().sum::<Rational>(), r(0, 1));
            assert_eq!(rep.counts.iter().sum::<usize>(), n);
        }
    }

    proptest! {
        #[test]
        fn interval_deficits_are_minimal(labels in proptest::collection::vec(1usize..4, 1..14), pick in any::<u64>()) {
            let mut labels = labels;
            // Make labels a valid partition by relabeling to first-occurrence order.
            let mut map = std::collections::HashMap::new();
            for l in labels.iter_mut() {
                let next = map.len() + 1;
                *l = *map.entry(*l).or_insert(next);
            }
            let p = VertexPartition::path(&labels).unwrap();
            let mut set = Vec::new();
            for v in 0..p.n() {
                if pick >> (v % 64) & 1 == 1 && set.last().is_none_or(|&u: &usize| v >= u + 2) {
                    set.push(v);
                }
            }
            let rep: FairnessReport<Rational> = interval_report(&p, &set).unwrap();
            for (i, &s) in p.class_sizes().iter().enumerate() {
                let target = r(s as i64, 2);
                let c = Rational::from_integer(rep.counts[i] as i64);
                prop_assert!(rep.deficits[i] >= r(0, 1));
                prop_assert!(c >= target - rep.deficits[i]);
                prop_assert!(c >= rep.quotas[i] - rep.deficits[i]);
                prop_assert!(rep.deficits[i] == r(0, 1) || c == target - rep.deficits[i]);
            }
            prop_assert_eq!(rep.counts.iter().sum::<usize>(), set.len());
        }
    }
}
