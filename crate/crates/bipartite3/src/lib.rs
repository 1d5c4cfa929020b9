//! Three-part edge partitions of `K_{n,n}`: a perfect matching meeting every
//! part within one of its quota, built from a hexagon boundary, a shifted
//! triangulated disk, a Sperner search and a local resolution step.

pub mod disk;
pub mod fill;
pub mod lopsided;
pub mod resolve;
pub mod shift;
pub mod solve;
pub mod walk;

use fairrep_core::{ColorMatrix, CoreError, Permutation};
use thiserror::Error;

pub use disk::{boundary_winding, build_disk, find_rainbow, DiskOutcome, DiskVertex, SimplicialDisk};
pub use fill::{fill_square, QuadFill};
pub use lopsided::{balanced_edge_coloring, lopsided_matching};
pub use resolve::{resolve_triangle, ResolveRoute};
pub use shift::{shift, shift_toward};
pub use solve::{within_bounds, pad_to_multiples, solve_three, PaddingRoute, ThreeSolution, Trace};
pub use walk::{boundary_walk, PropertyTag, Sense};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Bip3Error {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("no rainbow triangle in a disk of {triangles} triangles")]
    NoRainbow { triangles: usize },
    #[error("no permutation with all |d| ≤ 1 was found: {0}")]
    SearchExhausted(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// A three-part matrix with `|E_ℓ| = k_ℓ · n` for every part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Balanced {
    matrix: ColorMatrix,
    k: [usize; 3],
}

impl Balanced {
    pub fn new(matrix: ColorMatrix) -> Result<Self, Bip3Error> {
        if matrix.m() != 3 {
            return Err(Bip3Error::PreconditionViolation(format!("expected 3 parts, got {}", matrix.m())));
        }
        let n = matrix.n();
        let sizes = matrix.sizes();
        if sizes.iter().any(|&e| e % n != 0) {
            return Err(Bip3Error::PreconditionViolation(format!(
                "part sizes {sizes:?} are not multiples of n = {n}"
            )));
        }
        let k = [sizes[0] / n, sizes[1] / n, sizes[2] / n];
        Ok(Self { matrix, k })
    }

    pub fn matrix(&self) -> &ColorMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn k(&self) -> [usize; 3] {
        self.k
    }

    #[inline]
    pub fn part(&self, i: usize, j: usize) -> usize {
        self.matrix.get(i, j)
    }

    /// `d_ℓ(σ) = |{i : a_{iσ(i)} = ℓ}| − k_ℓ`.
    pub fn d(&self, sigma: &Permutation) -> [i64; 3] {
        let mut d = [-(self.k[0] as i64), -(self.k[1] as i64), -(self.k[2] as i64)];
        for i in 0..self.n() {
            d[self.part(i, sigma.get(i))] += 1;
        }
        d
    }

    pub fn is_solution(&self, sigma: &Permutation) -> bool {
        self.d(sigma).iter().all(|x| x.abs() <= 1)
    }
}
