use serde::{Deserialize, Serialize};

use crate::CoreError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Path,
    Cycle,
    PowerCycle,
}

/// Vertices `0..n` of a path, cycle or cycle power, each labeled with a class `0..m`.
///
/// For [`GraphKind::PowerCycle`] two vertices are adjacent when their cyclic
/// distance is below `s`; paths and cycles always have `s = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    kind: GraphKind,
    s: usize,
    classes: Vec<usize>,
    m: usize,
}

impl VertexPartition {
    pub fn new(kind: GraphKind, s: usize, classes: Vec<usize>) -> Result<Self, CoreError> {
        let n = classes.len();
        if n == 0 {
            return Err(CoreError::InvalidInstance("no vertices".into()));
        }
        match kind {
            GraphKind::Path | GraphKind::Cycle if s != 2 => {
                return Err(CoreError::InvalidInstance(format!("s must be 2 for {kind:?}, got {s}")));
            }
            GraphKind::Cycle if n <= 2 => {
                return Err(CoreError::InvalidInstance(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            GraphKind::PowerCycle if s < 2 => {
                return Err(CoreError::InvalidInstance(format!("s must be at least 2, got {s}")));
            }
            _ => {}
        }
        let m = classes.iter().max().map_or(0, |&c| c + 1);
        let mut seen = vec![false; m];
        for &c in &classes {
            seen[c] = true;
        }
        if let Some(empty) = seen.iter().position(|&x| !x) {
            return Err(CoreError::InvalidInstance(format!("class {} is empty", empty + 1)));
        }
        Ok(Self { kind, s, classes, m })
    }

    /// Builds an instance from 1-based class labels.
    pub fn from_one_based(kind: GraphKind, s: usize, labels: &[usize]) -> Result<Self, CoreError> {
        if labels.contains(&0) {
            return Err(CoreError::InvalidInstance("class labels are 1-based".into()));
        }
        Self::new(kind, s, labels.iter().map(|&c| c - 1).collect())
    }

    pub fn path(labels: &[usize]) -> Result<Self, CoreError> {
        Self::from_one_based(GraphKind::Path, 2, labels)
    }

    pub fn cycle(labels: &[usize]) -> Result<Self, CoreError> {
        Self::from_one_based(GraphKind::Cycle, 2, labels)
    }

    pub fn power_cycle(s: usize, labels: &[usize]) -> Result<Self, CoreError> {
        Self::from_one_based(GraphKind::PowerCycle, s, labels)
    }

    #[inline]
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Minimum cyclic (or linear) gap between chosen vertices.
    #[inline]
    pub fn s(&self) -> usize {
        self.s
    }

    /// Denominator of the fair quota `|V_i| / β`: 2 for paths and cycles, `s` for cycle powers.
    pub fn beta(&self) -> usize {
        match self.kind {
            GraphKind::Path | GraphKind::Cycle => 2,
            GraphKind::PowerCycle => self.s,
        }
    }

    #[inline]
    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn one_based_labels(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c + 1).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.m];
        for &c in &self.classes {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn members_of(&self, class: usize) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.classes[v] == class).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.kind != GraphKind::Path
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let d = u.abs_diff(v);
        if self.kind == GraphKind::Path {
            return d == 1;
        }
        d.min(self.n() - d) < self.s
    }

    /// Checks a strictly increasing vertex list for independence.
    pub fn is_independent(&self, members: &[usize]) -> bool {
        if members.iter().any(|&v| v >= self.n()) {
            return false;
        }
        if members.windows(2).any(|w| w[1] <= w[0] || w[1] - w[0] < self.s) {
            return false;
        }
        if self.is_cyclic() && members.len() >= 2 {
            let wrap = self.n() - members[members.len() - 1] + members[0];
            if wrap < self.s {
                return false;
            }
        }
        true
    }

    /// Per-class counts of a vertex set.
    pub fn counts(&self, members: &[usize]) -> Vec<usize> {
        let mut counts = vec![0; self.m];
        for &v in members {
            counts[self.classes[v]] += 1;
        }
        counts
    }
}

/// A validated independent set, members ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndependentSet {
    members: Vec<usize>,
}

impl IndependentSet {
    pub fn new(host: &VertexPartition, mut members: Vec<usize>) -> Result<Self, CoreError> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(CoreError::InvalidSolution(format!("repeated vertex in {members:?}")));
        }
        if !host.is_independent(&members) {
            return Err(CoreError::InvalidSolution(format!(
                "{:?} is not independent",
                members.iter().map(|v| v + 1).collect::<Vec<_>>()
            )));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.members.iter().map(|v| v + 1).collect()
    }
}
