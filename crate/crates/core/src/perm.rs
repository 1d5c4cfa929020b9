use std::fmt;

use crate::CoreError;

/// A bijection on `0..n`; `map[i]` is the image of `i`.
///
/// Read as a perfect matching of `K_{n,n}`: row `i` is matched to column `map[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, CoreError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(CoreError::InvalidSolution(format!(
                    "not a bijection on {n} points: {map:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self, CoreError> {
        if images.contains(&0) {
            return Err(CoreError::InvalidSolution("image 0 in 1-based permutation".into()));
        }
        Self::new(images.iter().map(|&v| v - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    /// Builds a permutation of `0..n` from disjoint cycles written 1-based,
    /// so `from_cycles(3, &[&[1, 2, 3]])` sends 1 to 2, 2 to 3 and 3 to 1.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, CoreError> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > n || b > n || touched[a - 1] {
                    return Err(CoreError::InvalidSolution(format!("bad cycle {cycle:?}")));
                }
                touched[a - 1] = true;
                map[a - 1] = b - 1;
            }
        }
        Self::new(map)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self { map: other.map.iter().map(|&v| self.map[v]).collect() }
    }

    /// Exchanges the images of `i` and `j` (swaps two matching edges).
    pub fn swap_images(&self, i: usize, j: usize) -> Self {
        let mut map = self.map.clone();
        map.swap(i, j);
        Self { map }
    }

    /// Positions where `self` and `other` disagree, ascending.
    pub fn disagreements(&self, other: &Self) -> Vec<usize> {
        assert_eq!(self.len(), other.len());
        (0..self.len()).filter(|&i| self.map[i] != other.map[i]).collect()
    }

    /// Advances to the next permutation in lexicographic order of `map`;
    /// returns `false` (leaving `self` unchanged) at the last one.
    pub fn next_lex(&mut self) -> bool {
        let a = &mut self.map;
        let n = a.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations { next: Some(Self::identity(n)) }
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.map[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points; the identity prints as `I`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "I");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

pub struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Number of positions where the two permutations differ.
pub fn hamming_distance(sigma: &Permutation, tau: &Permutation) -> Result<usize, CoreError> {
    if sigma.len() != tau.len() {
        return Err(CoreError::DimensionMismatch { left: sigma.len(), right: tau.len() });
    }
    Ok(sigma.map.iter().zip(&tau.map).filter(|(a, b)| a != b).count())
}

/// `σ ∼ τ`: Hamming distance at most 3.
pub fn sim(sigma: &Permutation, tau: &Permutation) -> Result<bool, CoreError> {
    Ok(hamming_distance(sigma, tau)? <= 3)
}

/// Distance without the dimension check, for hot loops over equal-length permutations.
#[inline]
pub fn distance_unchecked(sigma: &Permutation, tau: &Permutation) -> usize {
    sigma.map.iter().zip(&tau.map).filter(|(a, b)| a != b).count()
}
