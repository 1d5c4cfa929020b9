//! Triangulating one square between consecutive rows of the disk.

use fairrep_core::{distance_unchecked, Permutation};

use crate::shift::{shift, shift_toward};
use crate::Bip3Error;

/// Triangulation of the square `σ, τ, τ', σ'` where `σ ∼ τ` and the primed
/// permutations are `shift_i` of the unprimed ones.
///
/// Vertex indices: 0 = `σ`, 1 = `τ`, 2 = `τ'`, 3 = `σ'`, `4 + k` = `aux[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadFill {
    pub aux: Vec<Permutation>,
    pub triangles: Vec<[usize; 3]>,
}

#[inline]
fn close(a: &Permutation, b: &Permutation) -> bool {
    distance_unchecked(a, b) <= 3
}

/// Every permutation that agrees with `base` outside `positions`.
fn rearrangements(base: &Permutation, positions: &[usize]) -> Vec<Permutation> {
    let values: Vec<usize> = positions.iter().map(|&p| base.get(p)).collect();
    let mut out = Vec::new();
    let mut order = Permutation::identity(positions.len());
    loop {
        let mut map = base.as_slice().to_vec();
        for (k, &p) in positions.iter().enumerate() {
            map[p] = values[order.get(k)];
        }
        out.push(Permutation::new(map).expect("rearranged bijection"));
        if !order.next_lex() {
            break;
        }
    }
    out
}

/// Fills the square with top edge `σ τ` using shift index `i`.
pub fn fill_square(sigma: &Permutation, tau: &Permutation, i: usize) -> Result<QuadFill, Bip3Error> {
    let n = sigma.len();
    if tau.len() != n || i >= n {
        return Err(Bip3Error::PreconditionViolation(format!("bad square: n = {n}, i = {i}")));
    }
    let dist = distance_unchecked(sigma, tau);
    if dist > 3 {
        return Err(Bip3Error::PreconditionViolation(format!("{sigma} and {tau} are not adjacent")));
    }
    let sigma2 = shift(i, sigma);
    let tau2 = shift(i, tau);
    if close(sigma, &tau2) {
        return Ok(QuadFill { aux: vec![], triangles: vec![[0, 1, 2], [0, 2, 3]] });
    }
    if close(tau, &sigma2) {
        return Ok(QuadFill { aux: vec![], triangles: vec![[0, 1, 3], [1, 2, 3]] });
    }
    if dist == 3 {
        // Split the top edge at ρ, one step from σ toward τ.
        let j = sigma.disagreements(tau)[0];
        let rho = shift_toward(sigma, tau, j);
        let rho2 = shift(i, &rho);
        let left = fill_square(sigma, &rho, i)?;
        let right = fill_square(&rho, tau, i)?;
        // ρ = 4, ρ' = 5.
        let mut aux = vec![rho, rho2];
        let mut triangles = vec![[0, 1, 4], [5, 2, 3]];
        for (sub, corners) in [(left, [0, 4, 5, 3]), (right, [4, 1, 2, 5])] {
            let offset = 4 + aux.len();
            let map = |v: usize| if v < 4 { corners[v] } else { offset + v - 4 };
            triangles.extend(sub.triangles.iter().map(|t| [map(t[0]), map(t[1]), map(t[2])]));
            aux.extend(sub.aux);
        }
        return Ok(QuadFill { aux, triangles });
    }
    let corners = [sigma, tau, &tau2, &sigma2];
    let mut u: Vec<usize> = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            u.extend(corners[a].disagreements(corners[b]));
        }
    }
    u.sort_unstable();
    u.dedup();
    let candidates = rearrangements(sigma, &u);
    if let Some(c) = candidates.iter().find(|c| corners.iter().all(|x| close(c, x))) {
        return Ok(QuadFill {
            aux: vec![c.clone()],
            triangles: vec![[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]],
        });
    }
    // Two interior vertices: ρ1 near σ and σ', ρ2 near τ and τ', or mirrored.
    for mirrored in [false, true] {
        let (p, q, q2, p2) = if mirrored { (tau, sigma, &sigma2, &tau2) } else { (sigma, tau, &tau2, &sigma2) };
        let firsts: Vec<&Permutation> =
            candidates.iter().filter(|c| close(c, p) && close(c, q) && close(c, p2)).collect();
        let seconds: Vec<&Permutation> =
            candidates.iter().filter(|c| close(c, q) && close(c, q2) && close(c, p2)).collect();
        for r1 in &firsts {
            if let Some(r2) = seconds.iter().find(|r2| close(r1, r2)) {
                // Indices relative to (p, q, q2, p2) = (0, 1, 2, 3) unmirrored, (1, 0, 3, 2) mirrored.
                let (ip, iq, iq2, ip2) = if mirrored { (1, 0, 3, 2) } else { (0, 1, 2, 3) };
                return Ok(QuadFill {
                    aux: vec![(*r1).clone(), (*r2).clone()],
                    triangles: vec![
                        [ip, iq, 4],
                        [ip, 4, ip2],
                        [4, iq, 5],
                        [4, 5, ip2],
                        [5, iq, iq2],
                        [5, iq2, ip2],
                    ],
                });
            }
        }
    }
    Err(Bip3Error::Internal(format!("no triangulation of the square {sigma} {tau} under shift {}", i + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn check(sigma: &Permutation, tau: &Permutation, i: usize) -> usize {
        let f = fill_square(sigma, tau, i).unwrap();
        let mut labels = vec![sigma.clone(), tau.clone(), shift(i, tau), shift(i, sigma)];
        labels.extend(f.aux.iter().cloned());
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &f.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                assert!(close(&labels[a], &labels[b]), "{} {} in {:?}", labels[a], labels[b], f);
                *edges.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        let outer: BTreeSet<(usize, usize)> = [(0, 1), (1, 2), (2, 3), (0, 3)].into();
        for (e, c) in &edges {
            assert_eq!(*c, if outer.contains(e) { 1 } else { 2 }, "edge {e:?} in {f:?}");
        }
        let v = labels.len() as i64;
        assert_eq!(v - edges.len() as i64 + f.triangles.len() as i64, 1);
        f.aux.len()
    }

    #[test]
    fn every_adjacent_square_fills_small_n() {
        for n in 2..=6 {
            let moves: Vec<Permutation> =
                Permutation::all(n).filter(|p| distance_unchecked(p, &Permutation::identity(n)) <= 3).collect();
            for sigma in Permutation::all(n) {
                for mv in &moves {
                    let tau = sigma.compose(mv);
                    for i in 0..n {
                        check(&sigma, &tau, i);
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_example_uses_interior_vertices() {
        let sigma = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let tau = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert!(check(&sigma, &tau, 0) >= 1);
    }
}
