//! Exhaustive deciders for single instances of the open conjectures.

use fairrep_core::{ColorMatrix, GraphKind, Permutation, Rational, VertexPartition};
use fairrep_interval::oracle::for_each_independent_set;
use fairrep_interval::OracleCaps;
use serde::Serialize;

use crate::graph::LabelledGraph;
use crate::{ratio_str, LabError};

/// Largest `n` for which matrix checks enumerate all `n!` matchings.
pub const MATRIX_CAP: usize = 7;
/// Default node budget for graph searches.
pub const GRAPH_BUDGET: u64 = 50_000_000;

fn require_matrix_cap(a: &ColorMatrix) -> Result<(), LabError> {
    if a.n() > MATRIX_CAP {
        return Err(LabError::CapExceeded { what: "matrix side", size: a.n() as u128, cap: MATRIX_CAP as u128 });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreesVerdict {
    /// Some independent set has `Σ b_i ≤ m/2` and every `b_i ≤ 1`.
    pub holds: bool,
    /// Lexicographically least such set with the smallest `Σ b_i` (1-based).
    pub witness: Option<Vec<usize>>,
    #[serde(serialize_with = "ratio_str")]
    pub witness_total: Rational,
    /// Least `Σ b_i` over all independent sets, ignoring the individual bound.
    #[serde(serialize_with = "ratio_str")]
    pub optimum_total: Rational,
    pub sets_checked: u64,
}

/// Decides whether a path partition admits an independent set meeting both
/// the total bound `Σ b_i ≤ m/2` and the individual bound `b_i ≤ 1`.
pub fn check_treesconj0(instance: &VertexPartition, caps: OracleCaps) -> Result<TreesVerdict, LabError> {
    if instance.kind() != GraphKind::Path {
        return Err(LabError::Invalid(format!("expected a path, got {:?}", instance.kind())));
    }
    let sizes = instance.class_sizes();
    let m = instance.m();
    // Doubled deficits keep everything integral: 2 b_i = max(0, |V_i| − 2 count_i).
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut optimum = usize::MAX;
    let mut checked = 0u64;
    for_each_independent_set(instance, caps, |set| {
        checked += 1;
        let counts = instance.counts(set);
        let doubled: Vec<usize> = sizes.iter().zip(&counts).map(|(&s, &c)| s.saturating_sub(2 * c)).collect();
        let total: usize = doubled.iter().sum();
        optimum = optimum.min(total);
        if total <= m && doubled.iter().all(|&b| b <= 2) {
            let better = match &best {
                None => true,
                Some((t, w)) => total < *t || (total == *t && set < w.as_slice()),
            };
            if better {
                best = Some((total, set.to_vec()));
            }
        }
    })?;
    let half = |x: usize| Rational::new(x as i64, 2);
    Ok(TreesVerdict {
        holds: best.is_some(),
        witness_total: best.as_ref().map_or(Rational::from_integer(0), |(t, _)| half(*t)),
        witness: best.map(|(_, w)| w.iter().map(|v| v + 1).collect()),
        optimum_total: half(optimum),
        sets_checked: checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquirepVerdict {
    pub j: usize,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    pub witness_counts: Option<Vec<usize>>,
}

fn equirep_ok(a: &ColorMatrix, counts: &[usize], j: usize) -> bool {
    let n = a.n();
    a.sizes().iter().zip(counts).enumerate().all(|(i, (&e, &c))| if i == j { c + 1 >= e / n } else { c >= e / n })
}

/// Some perfect matching meets `⌊|E_i|/n⌋` for every part `i ≠ j` and
/// `⌊|E_j|/n⌋ − 1` for part `j` (0-based `j`).
pub fn check_equirep00(a: &ColorMatrix, j: usize) -> Result<EquirepVerdict, LabError> {
    require_matrix_cap(a)?;
    if j >= a.m() {
        return Err(LabError::Invalid(format!("part {} does not exist", j + 1)));
    }
    let hit = Permutation::all(a.n()).find(|p| equirep_ok(a, &a.counts(p), j));
    Ok(EquirepVerdict {
        j: j + 1,
        holds: hit.is_some(),
        witness_counts: hit.as_ref().map(|p| a.counts(p)),
        witness: hit.map(|p| p.to_one_based()),
    })
}

/// [`check_equirep00`] for every choice of the relaxed part.
pub fn check_equirep00_all(a: &ColorMatrix) -> Result<Vec<EquirepVerdict>, LabError> {
    require_matrix_cap(a)?;
    let mut found: Vec<Option<Permutation>> = vec![None; a.m()];
    for p in Permutation::all(a.n()) {
        let counts = a.counts(&p);
        for (j, slot) in found.iter_mut().enumerate() {
            if slot.is_none() && equirep_ok(a, &counts, j) {
                *slot = Some(p.clone());
            }
        }
        if found.iter().all(Option::is_some) {
            break;
        }
    }
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(j, hit)| EquirepVerdict {
            j: j + 1,
            holds: hit.is_some(),
            witness_counts: hit.as_ref().map(|p| a.counts(p)),
            witness: hit.map(|p| p.to_one_based()),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinVerdict {
    /// Some perfect matching meets at least `n − 1` distinct parts.
    pub holds: bool,
    /// Some perfect matching meets all `n` parts.
    pub full_transversal: bool,
    pub max_parts: usize,
    pub witness: Vec<usize>,
}

/// For a matrix whose `n` parts each have `n` cells: the most distinct parts
/// a perfect matching can meet.
pub fn check_stein(a: &ColorMatrix) -> Result<SteinVerdict, LabError> {
    require_matrix_cap(a)?;
    let n = a.n();
    if a.m() != n || a.sizes().iter().any(|&e| e != n) {
        return Err(LabError::Invalid(format!("expected {n} parts of size {n}, got sizes {:?}", a.sizes())));
    }
    let mut best = (0, Permutation::identity(n));
    for p in Permutation::all(n) {
        let hit = a.counts(&p).iter().filter(|&&c| c > 0).count();
        if hit > best.0 {
            best = (hit, p);
            if hit == n {
                break;
            }
        }
    }
    Ok(SteinVerdict {
        holds: best.0 + 1 >= n,
        full_transversal: best.0 == n,
        max_parts: best.0,
        witness: best.1.to_one_based(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowVerdict {
    /// A matching with one edge from every set exists.
    pub holds: bool,
    /// One edge per set, 1-based, in set order.
    pub witness: Option<Vec<(usize, usize)>>,
    pub max_degree: usize,
    pub set_sizes: Vec<usize>,
    /// Every set has at least `Δ + 2` edges.
    pub hypothesis: bool,
    /// Multigraph hosts are out of scope; sets are edge-disjoint in a simple graph.
    pub simple_host_only: bool,
}

/// Searches for a rainbow matching: one edge from each label class, pairwise disjoint.
pub fn check_rainbow(g: &LabelledGraph, budget: u64) -> Result<RainbowVerdict, LabError> {
    let m = g.m();
    let mut by_label: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (e, &l) in g.labels().iter().enumerate() {
        by_label[l].push(e);
    }
    // Smallest classes first.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&l| (by_label[l].len(), l));
    let mut used_l = vec![false; g.left()];
    let mut used_r = vec![false; g.right()];
    let mut pick = vec![usize::MAX; m];
    let mut nodes = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[usize],
        by_label: &[Vec<usize>],
        g: &LabelledGraph,
        used_l: &mut [bool],
        used_r: &mut [bool],
        pick: &mut [usize],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, LabError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(LabError::CapExceeded { what: "rainbow search", size: *nodes as u128, cap: budget as u128 });
        }
        if k == order.len() {
            return Ok(true);
        }
        let l = order[k];
        for &e in &by_label[l] {
            let (u, v) = g.edges()[e];
            if used_l[u] || used_r[v] {
                continue;
            }
            used_l[u] = true;
            used_r[v] = true;
            pick[l] = e;
            let found = rec(k + 1, order, by_label, g, used_l, used_r, pick, nodes, budget)?;
            used_l[u] = false;
            used_r[v] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let found = rec(0, &order, &by_label, g, &mut used_l, &mut used_r, &mut pick, &mut nodes, budget)?;
    let sizes = g.label_sizes();
    let delta = g.max_degree();
    Ok(RainbowVerdict {
        holds: found,
        witness: found.then(|| pick.iter().map(|&e| (g.edges()[e].0 + 1, g.edges()[e].1 + 1)).collect()),
        max_degree: delta,
        hypothesis: sizes.iter().all(|&s| s >= delta + 2),
        set_sizes: sizes,
        simple_host_only: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnderrepVerdict {
    /// `max(0, |E|/Δ − |S|)` for the largest matching `S` with every
    /// `|S ∩ E_i| ≤ ⌈|E_i|/Δ⌉`.
    #[serde(serialize_with = "ratio_str")]
    pub min_c: Rational,
    /// The candidate constant `m/2`.
    #[serde(serialize_with = "ratio_str")]
    pub bound: Rational,
    pub holds: bool,
    pub best_size: usize,
    pub witness: Vec<(usize, usize)>,
}

/// Least `c` such that some matching of size `≥ |E|/Δ − c` keeps every set
/// within `⌈|E_i|/Δ⌉`; compared with `m/2`.
pub fn check_underrep(g: &LabelledGraph, budget: u64) -> Result<UnderrepVerdict, LabError> {
    let delta = g.max_degree();
    let sizes = g.label_sizes();
    let caps: Vec<usize> = sizes.iter().map(|&s| if delta == 0 { 0 } else { s.div_ceil(delta) }).collect();
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    let mut per = vec![0usize; g.m()];
    g.for_each_matching(budget, |s| {
        if s.len() <= best.0 {
            return;
        }
        per.iter_mut().for_each(|x| *x = 0);
        for &e in s {
            per[g.labels()[e]] += 1;
        }
        if per.iter().zip(&caps).all(|(c, cap)| c <= cap) {
            best = (s.len(), s.to_vec());
        }
    })?;
    let raw = if delta == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(g.edge_count() as i64, delta as i64) - Rational::from_integer(best.0 as i64)
    };
    let min_c = raw.max(Rational::from_integer(0));
    let bound = Rational::new(g.m() as i64, 2);
    Ok(UnderrepVerdict {
        holds: min_c <= bound,
        min_c,
        bound,
        best_size: best.0,
        witness: best.1.iter().map(|&e| (g.edges()[e].0 + 1, g.edges()[e].1 + 1)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixVerdict {
    pub holds: bool,
    /// `⌊|{e : f(e) ≤ j}|/Δ⌋` for `j = 1..k`.
    pub quotas: Vec<usize>,
    pub witness: Option<Vec<(usize, usize)>>,
}

/// Some matching has at least `⌊|{e : f(e) ≤ j}|/Δ⌋` edges of level `≤ j`
/// for every `j`; labels are the levels `f(e) − 1`.
pub fn check_prefix_fair(g: &LabelledGraph, budget: u64) -> Result<PrefixVerdict, LabError> {
    let delta = g.max_degree();
    let k = g.m();
    let sizes = g.label_sizes();
    let quotas: Vec<usize> = (0..k)
        .map(|j| {
            let upto: usize = sizes[..=j].iter().sum();
            upto.checked_div(delta).unwrap_or(0)
        })
        .collect();
    let mut witness: Option<Vec<usize>> = None;
    let mut per = vec![0usize; k];
    g.for_each_matching(budget, |s| {
        if witness.is_some() {
            return;
        }
        per.iter_mut().for_each(|x| *x = 0);
        for &e in s {
            per[g.labels()[e]] += 1;
        }
        let mut acc = 0;
        let ok = (0..k).all(|j| {
            acc += per[j];
            acc >= quotas[j]
        });
        if ok {
            witness = Some(s.to_vec());
        }
    })?;
    Ok(PrefixVerdict {
        holds: witness.is_some(),
        quotas,
        witness: witness.map(|w| w.iter().map(|&e| (g.edges()[e].0 + 1, g.edges()[e].1 + 1)).collect()),
    })
}
