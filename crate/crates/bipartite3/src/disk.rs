//! The triangulated disk: a hexagon of lopsided matchings joined by
//! property-preserving walks, shifted row by row down to the identity.

use std::collections::HashMap;

use fairrep_core::{distance_unchecked, Permutation};
use serde::Serialize;

use crate::fill::fill_square;
use crate::lopsided::lopsided_matching;
use crate::shift::shift;
use crate::walk::{boundary_walk, PropertyTag, Sense};
use crate::{Balanced, Bip3Error};

/// Hexagon corners as (boost part, cap part), 0-based, in boundary order.
pub const CORNERS: [(usize, usize); 6] = [(1, 0), (2, 0), (2, 1), (0, 1), (0, 2), (1, 2)];

/// Property kept along the arc from corner `t` to corner `t + 1`.
pub fn arc_tags() -> [PropertyTag; 6] {
    [
        PropertyTag::minus(0),
        PropertyTag::plus(2),
        PropertyTag::minus(1),
        PropertyTag::plus(0),
        PropertyTag::minus(2),
        PropertyTag::plus(1),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiskVertex {
    #[serde(serialize_with = "one_based")]
    pub perm: Permutation,
    /// Row of the shifted grid (0 = boundary); `None` for square and hub vertices.
    pub row: Option<usize>,
    /// Smallest exceeded part (0-based, written 1-based); `None` when `d = 0`.
    #[serde(serialize_with = "one_based_color")]
    pub color: Option<usize>,
}

fn one_based_color<S: serde::Serializer>(c: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.serialize_some(&(c + 1)),
        None => s.serialize_none(),
    }
}

fn one_based<S: serde::Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.to_one_based())
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplicialDisk {
    pub vertices: Vec<DiskVertex>,
    pub triangles: Vec<[usize; 3]>,
    /// Boundary cycle as vertex indices.
    pub boundary: Vec<usize>,
    /// Arc `t` covers `boundary[arcs[t].0 ..= arcs[t].1]`, indices taken cyclically.
    pub arcs: [(usize, usize); 6],
    #[serde(skip)]
    pub tags: [PropertyTag; 6],
}

/// The result of searching a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiskOutcome {
    /// A vertex with `d = 0`, so no colour is defined.
    EarlyExit(Permutation),
    /// A triangle whose vertices exceed each quota in turn.
    Rainbow([Permutation; 3]),
    /// A boundary edge whose two ends together exceed every quota.
    BoundaryPair([Permutation; 2]),
    /// A boundary vertex that already qualifies.
    BoundarySolution(Permutation),
}

/// Colour of `σ`: the smallest part exceeded, if any.
pub fn color(d: &[i64; 3]) -> Option<usize> {
    (0..3).find(|&l| d[l] > 0)
}

/// Builds the hexagon boundary and the shifted triangulation inside it.
///
/// Requires every `k_ℓ ≥ 1`, equivalently `k_ℓ ∈ [1, n − 2]` for all parts.
pub fn build_disk(m: &Balanced) -> Result<SimplicialDisk, Bip3Error> {
    let n = m.n();
    if m.k().contains(&0) {
        return Err(Bip3Error::PreconditionViolation(format!("k = {:?} has an empty part", m.k())));
    }
    let vertex = |perm: Permutation, row: Option<usize>| DiskVertex { color: color(&m.d(&perm)), perm, row };
    let tags = arc_tags();
    let corners: Vec<Permutation> = CORNERS
        .iter()
        .map(|&(boost, cap)| lopsided_matching(m.matrix(), boost, cap))
        .collect::<Result<_, _>>()?;
    let mut ring: Vec<Permutation> = Vec::new();
    let mut arcs = [(0usize, 0usize); 6];
    for t in 0..6 {
        let mut path = boundary_walk(m, &corners[t], &corners[(t + 1) % 6], tags[t])?;
        if path.len() == 1 {
            path.push(path[0].clone());
        }
        let start = ring.len();
        let len = path.len();
        ring.extend(path.into_iter().take(len - 1));
        arcs[t] = (start, start + len - 1);
    }
    let l = ring.len();
    arcs[5].1 = 0;
    let mut vertices: Vec<DiskVertex> = Vec::with_capacity((n + 1) * l + 1);
    let idx = |row: usize, col: usize| row * l + col % l;
    let mut row_perms = ring;
    for r in 0..=n {
        vertices.extend(row_perms.iter().map(|p| vertex(p.clone(), Some(r))));
        if r < n {
            row_perms = row_perms.iter().map(|p| shift(r, p)).collect();
        }
    }
    let mut triangles = Vec::new();
    for r in 0..n {
        for c in 0..l {
            let corners = [idx(r, c), idx(r, c + 1), idx(r + 1, c + 1), idx(r + 1, c)];
            let fill = fill_square(&vertices[corners[0]].perm, &vertices[corners[1]].perm, r)?;
            let base = vertices.len();
            let map = |v: usize| if v < 4 { corners[v] } else { base + v - 4 };
            triangles.extend(fill.triangles.iter().map(|t| [map(t[0]), map(t[1]), map(t[2])]));
            vertices.extend(fill.aux.into_iter().map(|perm| vertex(perm, None)));
        }
    }
    let hub = vertices.len();
    vertices.push(vertex(Permutation::identity(n), None));
    triangles.extend((0..l).map(|c| [idx(n, c), idx(n, c + 1), hub]));
    Ok(SimplicialDisk { vertices, triangles, boundary: (0..l).collect(), arcs, tags })
}

impl SimplicialDisk {
    pub fn arc_members(&self, t: usize) -> Vec<usize> {
        let (s, e) = self.arcs[t];
        let l = self.boundary.len();
        let e = if e < s { e + l } else { e };
        (s..=e).map(|k| self.boundary[k % l]).collect()
    }

    /// Checks the triangulation, adjacency and boundary-property invariants.
    pub fn validate(&self, m: &Balanced) -> Result<(), String> {
        let l = self.boundary.len();
        if l < 3 {
            return Err(format!("boundary of length {l}"));
        }
        for t in &self.triangles {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(format!("degenerate triangle {t:?}"));
            }
            if t.iter().any(|&v| v >= self.vertices.len()) {
                return Err(format!("triangle {t:?} has an unknown vertex"));
            }
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                let (p, q) = (&self.vertices[a].perm, &self.vertices[b].perm);
                if distance_unchecked(p, q) > 3 {
                    return Err(format!("triangle {t:?} joins {p} and {q}"));
                }
            }
        }
        for k in 0..l {
            let (p, q) = (&self.vertices[self.boundary[k]].perm, &self.vertices[self.boundary[(k + 1) % l]].perm);
            if distance_unchecked(p, q) > 3 {
                return Err(format!("boundary edge joins {p} and {q}"));
            }
        }
        for t in 0..6 {
            if self.arcs[t].1 != self.arcs[(t + 1) % 6].0 {
                return Err(format!("arc {} ends at {} but arc {} starts at {}", t + 1, self.arcs[t].1, (t + 1) % 6 + 1, self.arcs[(t + 1) % 6].0));
            }
            for v in self.arc_members(t) {
                let p = &self.vertices[v].perm;
                let d = m.d(p);
                if !self.tags[t].holds(&d) {
                    return Err(format!("{p} on arc {} lacks {}", t + 1, self.tags[t]));
                }
                if self.tags[t].sense == Sense::Minus && color(&d) == Some(self.tags[t].part) {
                    return Err(format!("{p} on arc {} has colour {}", t + 1, self.tags[t].part + 1));
                }
            }
        }
        let mut edges: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &self.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *edges.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        let mut boundary_edges = 0;
        for (&(a, b), &c) in &edges {
            let on_boundary = a < l && b < l && ((a + 1) % l == b || (b + 1) % l == a);
            if on_boundary {
                boundary_edges += 1;
            }
            let want = if on_boundary { 1 } else { 2 };
            if c != want {
                return Err(format!("edge ({a}, {b}) lies in {c} triangles, expected {want}"));
            }
        }
        if boundary_edges != l {
            return Err(format!("{boundary_edges} of {l} boundary edges are covered"));
        }
        let chi = self.vertices.len() as i64 - edges.len() as i64 + self.triangles.len() as i64;
        if chi != 1 {
            return Err(format!("Euler characteristic {chi}"));
        }
        Ok(())
    }
}

/// Searches the disk: a `d = 0` vertex, then a rainbow triangle, then a
/// boundary edge covering all three colours, then a qualifying boundary vertex.
pub fn find_rainbow(m: &Balanced, disk: &SimplicialDisk) -> Result<DiskOutcome, Bip3Error> {
    let ds: Vec<[i64; 3]> = disk.vertices.iter().map(|v| m.d(&v.perm)).collect();
    if let Some(v) = ds.iter().position(|d| d.iter().all(|&x| x == 0)) {
        return Ok(DiskOutcome::EarlyExit(disk.vertices[v].perm.clone()));
    }
    let colors: Vec<usize> = ds.iter().map(|d| color(d).expect("nonzero d has a positive entry")).collect();
    for t in &disk.triangles {
        let mut seen = [false; 3];
        for &v in t {
            seen[colors[v]] = true;
        }
        if seen.iter().all(|&s| s) {
            let mut tri = t.map(|v| disk.vertices[v].perm.clone());
            tri.sort_by_key(|p| color(&m.d(p)));
            return Ok(DiskOutcome::Rainbow(tri));
        }
    }
    let l = disk.boundary.len();
    for k in 0..l {
        let (a, b) = (disk.boundary[k], disk.boundary[(k + 1) % l]);
        if (0..3).all(|x| ds[a][x] > 0 || ds[b][x] > 0) {
            return Ok(DiskOutcome::BoundaryPair([disk.vertices[a].perm.clone(), disk.vertices[b].perm.clone()]));
        }
    }
    if let Some(&v) = disk.boundary.iter().find(|&&v| m.is_solution(&disk.vertices[v].perm)) {
        return Ok(DiskOutcome::BoundarySolution(disk.vertices[v].perm.clone()));
    }
    Err(Bip3Error::NoRainbow { triangles: disk.triangles.len() })
}

/// Signed number of times the boundary colouring winds around the triangle
/// of colours; the count of rainbow triangles, with orientation, equals it.
pub fn boundary_winding(m: &Balanced, disk: &SimplicialDisk) -> Option<i64> {
    let l = disk.boundary.len();
    let mut thirds = 0i64;
    for k in 0..l {
        let a = color(&m.d(&disk.vertices[disk.boundary[k]].perm))?;
        let b = color(&m.d(&disk.vertices[disk.boundary[(k + 1) % l]].perm))?;
        thirds += match (b + 3 - a) % 3 {
            1 => 1,
            2 => -1,
            _ => 0,
        };
    }
    Some(thirds / 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fairrep_core::ColorMatrix;

    #[test]
    fn latin_square_disk_is_valid() {
        let m = Balanced::new(ColorMatrix::from_fn(3, 3, false, |i, j| (i + j) % 3).unwrap()).unwrap();
        let disk = build_disk(&m).unwrap();
        disk.validate(&m).unwrap();
        assert!(find_rainbow(&m, &disk).is_ok());
    }

    fn balanced(rows: &[Vec<usize>]) -> Balanced {
        Balanced::new(ColorMatrix::new(3, rows, false).unwrap()).unwrap()
    }

    #[test]
    fn patterned_and_random_disks_validate() {
        // k = (3, 1, 1) on n = 5: part 0 on three shifted diagonals.
        let m = Balanced::new(ColorMatrix::from_fn(5, 3, false, |i, j| match (j + 5 - i) % 5 {
            0..=2 => 0,
            3 => 1,
            _ => 2,
        }).unwrap()).unwrap();
        assert_eq!(m.k(), [3, 1, 1]);
        build_disk(&m).unwrap().validate(&m).unwrap();
        let rows = [vec![0, 0, 1, 2], vec![2, 0, 0, 1], vec![1, 2, 0, 0], vec![0, 1, 2, 0]];
        let m = balanced(&rows);
        let disk = build_disk(&m).unwrap();
        disk.validate(&m).unwrap();
        assert!(disk.vertices.iter().all(|v| v.color == color(&m.d(&v.perm))));
    }

    #[test]
    fn empty_part_is_rejected() {
        let rows = [vec![0, 0, 1], vec![0, 0, 1], vec![1, 0, 0]];
        let m = Balanced::new(ColorMatrix::new(3, &rows, true).unwrap()).unwrap();
        assert_eq!(m.k(), [2, 1, 0]);
        assert!(matches!(build_disk(&m), Err(Bip3Error::PreconditionViolation(_))));
    }

    #[test]
    fn zero_vertex_exits_early() {
        let m = balanced(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        let disk = build_disk(&m).unwrap();
        match find_rainbow(&m, &disk).unwrap() {
            DiskOutcome::EarlyExit(p) => assert_eq!(m.d(&p), [0, 0, 0]),
            other => panic!("{other:?}"),
        }
    }

    fn hand_disk(m: &Balanced, perms: Vec<Permutation>) -> SimplicialDisk {
        SimplicialDisk {
            vertices: perms.into_iter().map(|perm| DiskVertex { color: color(&m.d(&perm)), perm, row: Some(0) }).collect(),
            triangles: vec![[0, 1, 2]],
            boundary: vec![0, 1, 2],
            arcs: [(0, 1), (1, 1), (1, 2), (2, 2), (2, 0), (0, 0)],
            tags: arc_tags(),
        }
    }

    #[test]
    fn hand_built_triangles() {
        // Latin square with all-diagonal d = 2 at three 3-cycles.
        let m = balanced(&[vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]);
        let p = |v: Vec<usize>| Permutation::new(v).unwrap();
        let disk = hand_disk(&m, vec![p(vec![1, 2, 0]), p(vec![0, 1, 2]), p(vec![2, 0, 1])]);
        match find_rainbow(&m, &disk).unwrap() {
            DiskOutcome::Rainbow(tri) => {
                for (l, q) in tri.iter().enumerate() {
                    assert!(m.d(q)[l] > 0);
                }
            }
            other => panic!("{other:?}"),
        }
        let same = hand_disk(&m, vec![p(vec![0, 1, 2]); 3]);
        assert!(matches!(find_rainbow(&m, &same), Err(Bip3Error::NoRainbow { triangles: 1 })));
        assert!(same.validate(&m).is_err());
    }

    #[test]
    fn colors() {
        assert_eq!(color(&[1, -1, 0]), Some(0));
        assert_eq!(color(&[0, -1, 1]), Some(2));
        assert_eq!(color(&[0, 0, 0]), None);
    }
}
