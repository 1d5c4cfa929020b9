//! Property-preserving `∼`-paths between permutations.

use fairrep_core::{assignment::max_weight_assignment, Permutation};
use serde::Serialize;

use crate::shift::shift_toward;
use crate::{Balanced, Bip3Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    /// `d_ℓ ≥ 0`.
    Plus,
    /// `d_ℓ > 0`.
    PlusPlus,
    /// `d_ℓ ≤ 0`.
    Minus,
}

/// A property of a permutation relative to part `part` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PropertyTag {
    pub part: usize,
    pub sense: Sense,
}

impl PropertyTag {
    pub fn plus(part: usize) -> Self {
        Self { part, sense: Sense::Plus }
    }

    pub fn minus(part: usize) -> Self {
        Self { part, sense: Sense::Minus }
    }

    pub fn holds(&self, d: &[i64; 3]) -> bool {
        let x = d[self.part];
        match self.sense {
            Sense::Plus => x >= 0,
            Sense::PlusPlus => x > 0,
            Sense::Minus => x <= 0,
        }
    }
}

impl std::fmt::Display for PropertyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.sense {
            Sense::Plus => "+",
            Sense::PlusPlus => "++",
            Sense::Minus => "-",
        };
        write!(f, "{}{}", self.part + 1, s)
    }
}

/// The tag as "at least `k` ones of a 0-1 matrix on the permutation".
struct Indicator<'a> {
    m: &'a Balanced,
    tag: PropertyTag,
    k: usize,
}

impl Indicator<'_> {
    fn new(m: &Balanced, tag: PropertyTag) -> Result<Indicator<'_>, Bip3Error> {
        let k = match tag.sense {
            Sense::Plus => m.k()[tag.part],
            Sense::Minus => m.n() - m.k()[tag.part],
            Sense::PlusPlus => {
                return Err(Bip3Error::PreconditionViolation("walks preserve + or − properties only".into()));
            }
        };
        Ok(Indicator { m, tag, k })
    }

    #[inline]
    fn a(&self, i: usize, j: usize) -> i64 {
        let same = self.m.part(i, j) == self.tag.part;
        i64::from(if self.tag.sense == Sense::Plus { same } else { !same })
    }

    fn count(&self, p: &Permutation) -> usize {
        (0..p.len()).map(|i| self.a(i, p.get(i)) as usize).sum()
    }
}

/// Greedy descent from `from` to `rho` (count above `k`): each step shifts
/// toward `rho` at a position chosen so the count stays at least `k`.
fn descend(ind: &Indicator, from: &Permutation, rho: &Permutation) -> Result<Vec<Permutation>, Bip3Error> {
    let n = from.len();
    let mut path = vec![from.clone()];
    let mut cur = from.clone();
    while cur != *rho {
        let l = ind.count(&cur);
        let pick = (0..n).filter(|&j| cur.get(j) != rho.get(j)).find(|&j| {
            let gain = ind.a(j, rho.get(j)) - ind.a(j, cur.get(j));
            if l >= ind.k + 2 {
                true
            } else if l == ind.k + 1 {
                gain >= 0
            } else {
                gain > 0
            }
        });
        let Some(j) = pick else {
            return Err(Bip3Error::Internal(format!("walk toward {rho} stalled at {cur} with count {l}")));
        };
        cur = shift_toward(&cur, rho, j);
        if ind.count(&cur) < ind.k {
            return Err(Bip3Error::Internal(format!("walk left property {} at {cur}", ind.tag)));
        }
        path.push(cur.clone());
    }
    Ok(path)
}

/// A path from `from` to `to` whose consecutive entries are `∼`-related and
/// which all satisfy `preserve` (a `+` or `−` property).
///
/// Descends toward a permutation with count strictly above the threshold:
/// `to` itself, else `from` (path reversed), else a maximizer found by
/// assignment. When no permutation exceeds the threshold every permutation
/// satisfies the property and a plain transposition walk is used.
pub fn boundary_walk(
    m: &Balanced,
    from: &Permutation,
    to: &Permutation,
    preserve: PropertyTag,
) -> Result<Vec<Permutation>, Bip3Error> {
    let ind = Indicator::new(m, preserve)?;
    for (name, p) in [("from", from), ("to", to)] {
        if !preserve.holds(&m.d(p)) {
            return Err(Bip3Error::PreconditionViolation(format!("{name} = {p} lacks property {preserve}")));
        }
    }
    if from == to {
        return Ok(vec![from.clone()]);
    }
    if ind.count(to) > ind.k {
        return descend(&ind, from, to);
    }
    if ind.count(from) > ind.k {
        let mut path = descend(&ind, to, from)?;
        path.reverse();
        return Ok(path);
    }
    let n = m.n();
    let (rho, best) = max_weight_assignment(n, |i, j| ind.a(i, j));
    if best as usize > ind.k {
        let mut path = descend(&ind, from, &rho)?;
        let mut back = descend(&ind, to, &rho)?;
        back.pop();
        back.reverse();
        path.extend(back);
        return Ok(path);
    }
    let mut path = vec![from.clone()];
    let mut cur = from.clone();
    while let Some(&j) = cur.disagreements(to).first() {
        cur = shift_toward(&cur, to, j);
        if !preserve.holds(&m.d(&cur)) {
            return Err(Bip3Error::Internal(format!("transposition walk left property {preserve}")));
        }
        path.push(cur.clone());
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lopsided::lopsided_matching;
    use fairrep_core::{distance_unchecked, ColorMatrix};
    use rand::{Rng, SeedableRng};

    fn random_balanced(rng: &mut impl Rng, n: usize) -> Balanced {
        // Each row holds k_ℓ entries of part ℓ, shuffled, so |E_ℓ| = k_ℓ n.
        let k1 = rng.gen_range(1..n - 1);
        let k2 = rng.gen_range(1..n - k1);
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let mut row: Vec<usize> = (0..n).map(|j| if j < k1 { 0 } else if j < k1 + k2 { 1 } else { 2 }).collect();
                for x in (1..n).rev() {
                    row.swap(x, rng.gen_range(0..=x));
                }
                row
            })
            .collect();
        Balanced::new(ColorMatrix::new(3, &rows, false).unwrap()).unwrap()
    }

    #[test]
    fn walks_between_lopsided_corners() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let n = rng.gen_range(3..8);
            let m = random_balanced(&mut rng, n);
            let a = lopsided_matching(m.matrix(), 1, 0).unwrap();
            let b = lopsided_matching(m.matrix(), 2, 0).unwrap();
            let tag = PropertyTag::minus(0);
            let path = boundary_walk(&m, &a, &b, tag).unwrap();
            assert_eq!(path.first(), Some(&a));
            assert_eq!(path.last(), Some(&b));
            for w in path.windows(2) {
                assert!(distance_unchecked(&w[0], &w[1]) <= 3);
            }
            assert!(path.iter().all(|p| tag.holds(&m.d(p))));
        }
    }

    #[test]
    fn trivial_walks() {
        let m = Balanced::new(ColorMatrix::from_fn(3, 3, false, |i, _| i).unwrap()).unwrap();
        let p = Permutation::identity(3);
        assert_eq!(boundary_walk(&m, &p, &p, PropertyTag::plus(0)).unwrap(), vec![p.clone()]);
        let q = p.swap_images(0, 1);
        assert!(boundary_walk(&m, &p, &q, PropertyTag::plus(0)).unwrap().len() <= 3);
    }

    #[test]
    fn rejects_endpoints_without_property() {
        let m = Balanced::new(ColorMatrix::from_fn(3, 3, false, |i, j| (i + j) % 3).unwrap()).unwrap();
        let p = Permutation::new(vec![0, 2, 1]).unwrap();
        assert_eq!(m.d(&p), [2, -1, -1]);
        assert!(boundary_walk(&m, &p, &p, PropertyTag::plus(1)).is_err());
    }
}
