use crate::{CoreError, Permutation};

/// An `n × n` array of part labels `0..m`, i.e. a partition of `E(K_{n,n})`
/// into `E_1..E_m` with edge `(i, j)` in part `colors[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorMatrix {
    n: usize,
    m: usize,
    colors: Vec<u8>,
    sizes: Vec<usize>,
    allow_empty: bool,
}

impl ColorMatrix {
    /// Rows of 0-based part labels. Empty parts are rejected unless `allow_empty`.
    pub fn new(m: usize, rows: &[Vec<usize>], allow_empty: bool) -> Result<Self, CoreError> {
        let n = rows.len();
        if n == 0 {
            return Err(CoreError::InvalidInstance("empty matrix".into()));
        }
        if m == 0 || m > u8::MAX as usize {
            return Err(CoreError::InvalidInstance(format!("unsupported part count {m}")));
        }
        let mut colors = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CoreError::InvalidInstance(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &c in row {
                if c >= m {
                    return Err(CoreError::InvalidInstance(format!("part label {} outside 1..{m}", c + 1)));
                }
                colors.push(c as u8);
            }
        }
        Self::from_flat(n, m, colors, allow_empty)
    }

    pub fn from_one_based(m: usize, rows: &[Vec<usize>], allow_empty: bool) -> Result<Self, CoreError> {
        let mut zero = Vec::with_capacity(rows.len());
        for row in rows {
            if row.contains(&0) {
                return Err(CoreError::InvalidInstance("part labels are 1-based".into()));
            }
            zero.push(row.iter().map(|&c| c - 1).collect());
        }
        Self::new(m, &zero, allow_empty)
    }

    pub fn from_fn(
        n: usize,
        m: usize,
        allow_empty: bool,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, CoreError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(m, &rows, allow_empty)
    }

    fn from_flat(n: usize, m: usize, colors: Vec<u8>, allow_empty: bool) -> Result<Self, CoreError> {
        let mut sizes = vec![0; m];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        if !allow_empty {
            if let Some(p) = sizes.iter().position(|&s| s == 0) {
                return Err(CoreError::InvalidInstance(format!("part {} is empty", p + 1)));
            }
        }
        Ok(Self { n, m, colors, sizes, allow_empty })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.colors[i * self.n + j] as usize
    }

    /// `|E_1|..|E_m|`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn allows_empty(&self) -> bool {
        self.allow_empty
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn one_based_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) + 1).collect()).collect()
    }

    /// Per-part counts `|σ ∩ E_ℓ|`.
    pub fn counts(&self, sigma: &Permutation) -> Vec<usize> {
        assert_eq!(sigma.len(), self.n, "permutation size does not match matrix");
        let mut counts = vec![0; self.m];
        for i in 0..self.n {
            counts[self.get(i, sigma.get(i))] += 1;
        }
        counts
    }

    /// Count of a single part along `σ`.
    pub fn count_part(&self, sigma: &Permutation, part: usize) -> usize {
        (0..self.n).filter(|&i| self.get(i, sigma.get(i)) == part).count()
    }

    /// Relabels parts: old part `p` becomes `mapping[p]`.
    pub fn relabel(&self, mapping: &[usize]) -> Result<Self, CoreError> {
        let colors = self.colors.iter().map(|&c| mapping[c as usize] as u8).collect();
        Self::from_flat(self.n, self.m, colors, self.allow_empty)
    }

    /// Same partition with a different empty-part policy.
    pub fn with_allow_empty(&self, allow_empty: bool) -> Result<Self, CoreError> {
        Self::from_flat(self.n, self.m, self.colors.clone(), allow_empty)
    }

    /// Replaces single cells; used by size-padding reductions.
    pub fn with_cells(&self, cells: &[(usize, usize, usize)]) -> Result<Self, CoreError> {
        let mut colors = self.colors.clone();
        for &(i, j, c) in cells {
            colors[i * self.n + j] = c as u8;
        }
        Self::from_flat(self.n, self.m, colors, self.allow_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_counts() {
        let a = ColorMatrix::from_one_based(3, &[vec![1, 1, 2], vec![3, 1, 2], vec![2, 3, 1]], false).unwrap();
        assert_eq!(a.sizes(), &[4, 3, 2]);
        assert_eq!(a.sizes().iter().sum::<usize>(), 9);
        assert_eq!(a.counts(&Permutation::identity(3)), vec![3, 0, 0]);
        assert_eq!(a.count_part(&Permutation::identity(3), 0), 3);
    }

    #[test]
    fn empty_parts_need_the_flag() {
        let rows = vec![vec![1, 1], vec![1, 1]];
        assert!(ColorMatrix::from_one_based(2, &rows, false).is_err());
        let a = ColorMatrix::from_one_based(2, &rows, true).unwrap();
        assert_eq!(a.sizes(), &[4, 0]);
    }

    #[test]
    fn rejects_bad_shapes_and_labels() {
        assert!(ColorMatrix::from_one_based(2, &[vec![1, 2], vec![1]], true).is_err());
        assert!(ColorMatrix::from_one_based(2, &[vec![1, 3], vec![1, 2]], true).is_err());
        assert!(ColorMatrix::from_one_based(2, &[vec![0, 1], vec![1, 2]], true).is_err());
    }

    #[test]
    fn relabel_moves_sizes() {
        let a = ColorMatrix::from_one_based(3, &[vec![1, 1, 2], vec![3, 1, 2], vec![2, 3, 1]], false).unwrap();
        let b = a.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(b.sizes(), &[3, 2, 4]);
    }
}
