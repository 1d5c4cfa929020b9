//! Rigid sets `F = K×L ∪ K̄×L̄`: exactly the sets met with one parity by every perfect matching.

use fairrep_core::{ColorMatrix, Permutation};

use crate::{in_f, require_two_parts, Bip2Error};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub rigid: bool,
    /// Rows `K` (0-based, contains row 0), present iff rigid.
    pub k: Option<Vec<usize>>,
    /// Columns `L` (0-based), present iff rigid.
    pub l: Option<Vec<usize>>,
    /// Two matchings whose `F`-counts have opposite parity, present iff not rigid.
    pub witness: Option<(Permutation, Permutation)>,
}

/// Decides rigidity in `O(n²)`: `F` is rigid iff every row equals row 0 or its complement.
pub fn check_rigidity(a: &ColorMatrix) -> Result<RigidityCertificate, Bip2Error> {
    require_two_parts(a)?;
    let n = a.n();
    let row0: Vec<bool> = (0..n).map(|j| in_f(a, 0, j)).collect();
    let mut k = vec![0];
    for i in 1..n {
        let same = (0..n).all(|j| in_f(a, i, j) == row0[j]);
        let comp = (0..n).all(|j| in_f(a, i, j) != row0[j]);
        if same {
            k.push(i);
        } else if !comp {
            // Rows 0 and i agree on some column and differ on another, so the
            // 2×2 minor on those columns holds an odd number of F-cells.
            let differ = (0..n).find(|&j| in_f(a, i, j) != row0[j]).expect("not identical");
            let agree = (0..n).find(|&j| in_f(a, i, j) == row0[j]).expect("not complementary");
            let mut map = vec![usize::MAX; n];
            map[0] = differ;
            map[i] = agree;
            let mut free = (0..n).filter(|&j| j != differ && j != agree);
            for slot in map.iter_mut().filter(|x| **x == usize::MAX) {
                *slot = free.next().expect("enough columns");
            }
            let sigma = Permutation::new(map)?;
            let tau = sigma.swap_images(0, i);
            return Ok(RigidityCertificate { rigid: false, k: None, l: None, witness: Some((sigma, tau)) });
        }
    }
    let l = (0..n).filter(|&j| row0[j]).collect();
    Ok(RigidityCertificate { rigid: true, k: Some(k), l: Some(l), witness: None })
}

/// Counts `|P ∩ F|` attained by the perfect matchings of a rigid `F` with
/// blocks of sizes `|K| = k`, `|L| = l`: `n − k − l + 2t` for
/// `max(0, k + l − n) ≤ t ≤ min(k, l)`, ascending.
pub fn rigid_achievable(n: usize, k: usize, l: usize) -> Vec<usize> {
    let lo = (k + l).saturating_sub(n);
    let hi = k.min(l);
    (lo..=hi).map(|t| n + 2 * t - k - l).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Mixed => "mixed",
        })
    }
}

/// Common parity of `|P ∩ F|` over all perfect matchings, or `Mixed`.
pub fn parity_signature(a: &ColorMatrix) -> Result<Parity, Bip2Error> {
    let cert = check_rigidity(a)?;
    Ok(match (cert.k, cert.l) {
        (Some(k), Some(l)) if (a.n() + k.len() + l.len()).is_multiple_of(2) => Parity::Even,
        (Some(_), Some(_)) => Parity::Odd,
        _ => Parity::Mixed,
    })
}
