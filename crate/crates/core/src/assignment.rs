//! Exact O(n³) assignment via shortest augmenting paths with potentials.

use crate::Permutation;

/// Permutation maximizing `Σ_i weight(i, σ(i))`, together with that maximum.
///
/// Ties are resolved deterministically by the augmentation order (rows ascending).
pub fn max_weight_assignment(n: usize, weight: impl Fn(usize, usize) -> i64) -> (Permutation, i64) {
    if n == 0 {
        return (Permutation::identity(0), 0);
    }
    let cost = |i: usize, j: usize| -weight(i - 1, j - 1);
    const INF: i64 = i64::MAX / 4;
    // 1-based: p[j] is the row matched to column j, p[0] the row being inserted.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0, j) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut map = vec![0; n];
    for j in 1..=n {
        map[p[j] - 1] = j - 1;
    }
    let sigma = Permutation::new(map).expect("assignment is a bijection");
    let total = (0..n).map(|i| weight(i, sigma.get(i))).sum();
    (sigma, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn brute(n: usize, w: &[Vec<i64>]) -> i64 {
        Permutation::all(n).map(|p| (0..n).map(|i| w[i][p.get(i)]).sum::<i64>()).max().unwrap()
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..7);
            let w: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..5)).collect()).collect();
            let (sigma, total) = max_weight_assignment(n, |i, j| w[i][j]);
            assert_eq!(total, brute(n, &w));
            assert_eq!(total, (0..n).map(|i| w[i][sigma.get(i)]).sum::<i64>());
        }
    }

    #[test]
    fn zero_one_weights() {
        let (_, total) = max_weight_assignment(3, |i, _| i64::from(i == 0));
        assert_eq!(total, 1);
        let (_, total) = max_weight_assignment(4, |i, j| i64::from(i == j));
        assert_eq!(total, 4);
        assert_eq!(max_weight_assignment(0, |_, _| 0).1, 0);
    }
}
