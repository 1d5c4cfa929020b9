//! Matchings with many edges of one part and few of another, via balanced
//! edge colorings of bipartite graphs.

use fairrep_core::{ColorMatrix, Permutation};

use crate::Bip3Error;

struct Coloring {
    colors: Vec<usize>,
    at_row: Vec<Vec<Option<usize>>>,
    at_col: Vec<Vec<Option<usize>>>,
}

impl Coloring {
    fn set(&mut self, edges: &[(usize, usize)], e: usize, c: usize) {
        let (u, v) = edges[e];
        self.colors[e] = c;
        self.at_row[u][c] = Some(e);
        self.at_col[v][c] = Some(e);
    }

    fn unset(&mut self, edges: &[(usize, usize)], e: usize) {
        let (u, v) = edges[e];
        let c = self.colors[e];
        self.at_row[u][c] = None;
        self.at_col[v][c] = None;
    }

    /// Edges of the path alternating colors `a, b, a, …` starting at column `v` with color `a`.
    fn alternating_from_col(&self, edges: &[(usize, usize)], v: usize, a: usize, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut at_col = true;
        let mut vertex = v;
        let mut color = a;
        loop {
            let slot = if at_col { self.at_col[vertex][color] } else { self.at_row[vertex][color] };
            let Some(e) = slot else { break };
            out.push(e);
            let (r, c) = edges[e];
            vertex = if at_col { r } else { c };
            at_col = !at_col;
            color = if color == a { b } else { a };
        }
        out
    }

    fn swap_on(&mut self, edges: &[(usize, usize)], path: &[usize], a: usize, b: usize) {
        for &e in path {
            self.unset(edges, e);
        }
        for &e in path {
            let c = if self.colors[e] == a { b } else { a };
            self.set(edges, e, c);
        }
    }
}

/// Proper coloring of the bipartite graph `edges ⊆ [n] × [n]` with `n` colors
/// whose class sizes are all `⌊|E|/n⌋` or `⌈|E|/n⌉`.
pub fn balanced_edge_coloring(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, Bip3Error> {
    let mut col = Coloring {
        colors: vec![usize::MAX; edges.len()],
        at_row: vec![vec![None; n]; n],
        at_col: vec![vec![None; n]; n],
    };
    for (e, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Bip3Error::PreconditionViolation(format!("edge ({u}, {v}) outside [n] × [n]")));
        }
        let free_u = (0..n).find(|&c| col.at_row[u][c].is_none());
        let free_v = (0..n).find(|&c| col.at_col[v][c].is_none());
        let (Some(a), Some(b)) = (free_u, free_v) else {
            return Err(Bip3Error::PreconditionViolation(format!("degree above {n} at edge ({u}, {v})")));
        };
        if col.at_col[v][a].is_some() {
            let path = col.alternating_from_col(edges, v, a, b);
            col.swap_on(edges, &path, a, b);
            if col.at_row[u][a].is_some() || col.at_col[v][a].is_some() {
                return Err(Bip3Error::Internal("alternating path recoloring left no free color".into()));
            }
        }
        col.set(edges, e, a);
    }
    // Rebalance: a path component of two classes with the larger class at
    // both ends moves one edge from the larger to the smaller class.
    loop {
        let mut size = vec![0usize; n];
        for &c in &col.colors {
            size[c] += 1;
        }
        let (big, &hi) = size.iter().enumerate().max_by_key(|&(c, &s)| (s, std::cmp::Reverse(c))).expect("n ≥ 1");
        let (small, &lo) = size.iter().enumerate().min_by_key(|&(c, &s)| (s, c)).expect("n ≥ 1");
        if hi <= lo + 1 {
            break;
        }
        let mut swapped = false;
        for v in 0..n {
            if col.at_col[v][big].is_some() && col.at_col[v][small].is_none() {
                let path = col.alternating_from_col(edges, v, big, small);
                if path.len() % 2 == 1 {
                    col.swap_on(edges, &path, big, small);
                    swapped = true;
                    break;
                }
            }
        }
        if !swapped {
            return Err(Bip3Error::Internal(format!("rebalancing stalled between colors {big} and {small}")));
        }
    }
    Ok(col.colors)
}

/// Perfect matching with at least `⌈|E_boost|/n⌉` edges of `E_boost` and at most
/// `⌈|E_cap|/n⌉` edges of `E_cap` (parts 0-based, distinct).
///
/// Colors `E ∖ E_cap` in balanced classes, takes the class with the most
/// boost edges and completes it by matching the leftover rows and columns in
/// ascending order.
pub fn lopsided_matching(a: &ColorMatrix, boost: usize, cap: usize) -> Result<Permutation, Bip3Error> {
    if a.m() != 3 || boost >= 3 || cap >= 3 || boost == cap {
        return Err(Bip3Error::PreconditionViolation(format!(
            "need 3 parts and distinct boost/cap, got m = {}, boost = {boost}, cap = {cap}",
            a.m()
        )));
    }
    let n = a.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) != cap {
                edges.push((i, j));
            }
        }
    }
    let colors = balanced_edge_coloring(n, &edges)?;
    let mut boost_in = vec![0usize; n];
    for (e, &(i, j)) in edges.iter().enumerate() {
        if a.get(i, j) == boost {
            boost_in[colors[e]] += 1;
        }
    }
    let best = (0..n).max_by_key(|&c| (boost_in[c], std::cmp::Reverse(c))).expect("n ≥ 1");
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for (e, &(i, j)) in edges.iter().enumerate() {
        if colors[e] == best {
            map[i] = j;
            used[j] = true;
        }
    }
    let mut free = (0..n).filter(|&j| !used[j]);
    for slot in map.iter_mut().filter(|x| **x == usize::MAX) {
        *slot = free.next().expect("as many free columns as free rows");
    }
    Ok(Permutation::new(map)?)
}
