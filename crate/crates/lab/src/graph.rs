//! Simple bipartite graphs whose edges carry a label (a set index or a level).

use serde::{Deserialize, Serialize};

use crate::LabError;

/// Bipartite graph on `left + right` vertices; edge `e` joins `edges[e].0`
/// on the left to `edges[e].1` on the right and carries `labels[e] < m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    left: usize,
    right: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<usize>,
}

/// JSON form: 1-based vertices and labels, one `[u, v, label]` triple per edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelledGraphJson {
    pub left: usize,
    pub right: usize,
    pub m: usize,
    pub edges: Vec<[usize; 3]>,
}

impl LabelledGraph {
    pub fn new(left: usize, right: usize, m: usize, edges: Vec<(usize, usize, usize)>) -> Result<Self, LabError> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v, l) in &edges {
            if u >= left || v >= right || l >= m {
                return Err(LabError::Invalid(format!("edge ({}, {}) with label {} is out of range", u + 1, v + 1, l + 1)));
            }
            if !seen.insert((u, v)) {
                return Err(LabError::Invalid(format!(
                    "edge ({}, {}) repeats; only simple hosts are supported",
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(Self {
            left,
            right,
            m,
            edges: edges.iter().map(|&(u, v, _)| (u, v)).collect(),
            labels: edges.iter().map(|&(_, _, l)| l).collect(),
        })
    }

    pub fn from_json(raw: LabelledGraphJson) -> Result<Self, LabError> {
        let mut edges = Vec::with_capacity(raw.edges.len());
        for [u, v, l] in raw.edges {
            if u == 0 || v == 0 || l == 0 {
                return Err(LabError::Invalid("vertices and labels are 1-based".into()));
            }
            edges.push((u - 1, v - 1, l - 1));
        }
        Self::new(raw.left, raw.right, raw.m, edges)
    }

    pub fn to_json(&self) -> LabelledGraphJson {
        LabelledGraphJson {
            left: self.left,
            right: self.right,
            m: self.m,
            edges: self.edges.iter().zip(&self.labels).map(|(&(u, v), &l)| [u + 1, v + 1, l + 1]).collect(),
        }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.left + self.right];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[self.left + v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Number of edges with each label.
    pub fn label_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.m];
        for &l in &self.labels {
            out[l] += 1;
        }
        out
    }

    /// Calls `visit` with the edge indices of every matching (including the
    /// empty one). Fails once more than `budget` search nodes are visited.
    pub fn for_each_matching(&self, budget: u64, mut visit: impl FnMut(&[usize])) -> Result<(), LabError> {
        let mut used_l = vec![false; self.left];
        let mut used_r = vec![false; self.right];
        let mut cur = Vec::new();
        let mut nodes = 0u64;
        self.matchings_from(0, &mut used_l, &mut used_r, &mut cur, &mut nodes, budget, &mut visit)?;
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn matchings_from(
        &self,
        e: usize,
        used_l: &mut [bool],
        used_r: &mut [bool],
        cur: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<(), LabError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(LabError::CapExceeded { what: "matching search", size: *nodes as u128, cap: budget as u128 });
        }
        if e == self.edges.len() {
            visit(cur);
            return Ok(());
        }
        let (u, v) = self.edges[e];
        if !used_l[u] && !used_r[v] {
            used_l[u] = true;
            used_r[v] = true;
            cur.push(e);
            self.matchings_from(e + 1, used_l, used_r, cur, nodes, budget, visit)?;
            cur.pop();
            used_l[u] = false;
            used_r[v] = false;
        }
        self.matchings_from(e + 1, used_l, used_r, cur, nodes, budget, visit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_matchings_of_k22() {
        let g = LabelledGraph::new(2, 2, 1, vec![(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]).unwrap();
        let mut count = 0;
        g.for_each_matching(1000, |_| count += 1).unwrap();
        // Empty, four single edges, two perfect matchings.
        assert_eq!(count, 7);
        assert_eq!(g.max_degree(), 2);
        assert!(g.for_each_matching(3, |_| {}).is_err());
    }

    #[test]
    fn rejects_repeated_edges_and_round_trips() {
        assert!(LabelledGraph::new(1, 1, 2, vec![(0, 0, 0), (0, 0, 1)]).is_err());
        let g = LabelledGraph::new(2, 3, 2, vec![(0, 2, 1), (1, 0, 0)]).unwrap();
        assert_eq!(LabelledGraph::from_json(g.to_json()).unwrap(), g);
    }
}
