//! Seeded sweeps of one conjecture over a family of small instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fairrep_core::{render_instance, ColorMatrix, GraphKind, Instance, Rational, VertexPartition};
use fairrep_interval::OracleCaps;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::conjectures::{
    check_equirep00_all, check_prefix_fair, check_rainbow, check_stein, check_treesconj0, check_underrep,
    GRAPH_BUDGET,
};
use crate::enumerate::{for_each_labelling, for_each_matrix_up_to_symmetry};
use crate::graph::LabelledGraph;
use crate::verify;
use crate::LabError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureId {
    Treesconj0,
    Equirep00,
    Stein,
    Rainbow,
    Underrep,
    PrefixFair,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 6] = [
        ConjectureId::Treesconj0,
        ConjectureId::Equirep00,
        ConjectureId::Stein,
        ConjectureId::Rainbow,
        ConjectureId::Underrep,
        ConjectureId::PrefixFair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::Treesconj0 => "treesconj0",
            ConjectureId::Equirep00 => "equirep00",
            ConjectureId::Stein => "stein",
            ConjectureId::Rainbow => "rainbow",
            ConjectureId::Underrep => "underrep",
            ConjectureId::PrefixFair => "prefix_fair",
        }
    }

    /// What `n` and `m` mean for this conjecture's instance family.
    pub fn family(self) -> &'static str {
        match self {
            ConjectureId::Treesconj0 => "paths on n vertices using all m classes",
            ConjectureId::Equirep00 => "n×n matrices split into m nonempty parts",
            ConjectureId::Stein => "n×n matrices with n parts of size n (m is ignored)",
            ConjectureId::Rainbow | ConjectureId::Underrep => "subgraphs of K_{n,n} with edges split into m sets",
            ConjectureId::PrefixFair => "subgraphs of K_{n,n} with edge levels 1..m",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| LabError::Invalid(format!("unknown conjecture {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub conjecture: ConjectureId,
    pub n: usize,
    pub m: usize,
    pub mode: SweepMode,
    /// Instances drawn in random mode.
    pub samples: u64,
    pub seed: u64,
    /// Largest family an exhaustive sweep may enumerate.
    pub budget: u128,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl SweepConfig {
    pub fn new(conjecture: ConjectureId, n: usize, m: usize, mode: SweepMode) -> Self {
        Self { conjecture, n, m, mode, samples: 10_000, seed: 0, budget: 10_000_000, workers: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    /// Position in the family (enumeration order or sample index).
    pub index: u64,
    pub instance: serde_json::Value,
    pub verdict: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepOutcome {
    pub config: SweepConfig,
    pub family: &'static str,
    /// Scope notes, such as hosts being restricted to simple graphs.
    pub notes: Vec<String>,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Named extremes over the family, rendered as strings.
    pub extremes: BTreeMap<String, String>,
}

/// One generated instance of the family.
#[derive(Debug, Clone)]
enum Item {
    Path(VertexPartition),
    Matrix(ColorMatrix),
    Graph(LabelledGraph),
}

impl Item {
    fn json(&self) -> serde_json::Value {
        let text = match self {
            Item::Path(p) => render_instance(&Instance::Interval(p.clone())),
            Item::Matrix(a) => render_instance(&Instance::Bipartite(a.clone())),
            Item::Graph(g) => return serde_json::to_value(g.to_json()).expect("graph serializes"),
        };
        serde_json::from_str(&text).expect("rendered instance is JSON")
    }
}

/// Per-instance measurement folded into the extremes.
#[derive(Debug, Clone, Default)]
struct Measure {
    counterexample: Option<serde_json::Value>,
    /// Largest optimum Σb (treesconj0), largest minimal c (underrep).
    high: Option<Rational>,
    /// Fewest parts met (stein), least slack (equirep00).
    low: Option<i64>,
    /// Instances where the hypothesis applies (rainbow).
    applies: u64,
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, LabError> {
    if config.n == 0 {
        return Err(LabError::Invalid("n must be at least 1".into()));
    }
    let needs_m = config.conjecture != ConjectureId::Stein;
    if needs_m && config.m == 0 {
        return Err(LabError::Invalid("m must be at least 1".into()));
    }
    let items: Vec<(u64, Item)> = match config.mode {
        SweepMode::Exhaustive => exhaustive_family(config)?,
        SweepMode::Random => (0..config.samples).map(|i| Ok((i, random_item(config, i)?))).collect::<Result<_, LabError>>()?,
    };
    let measure = |item: &Item| measure(config.conjecture, item);
    let results: Vec<Result<Measure, LabError>> = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| LabError::Invalid(format!("thread pool: {e}")))?
            .install(|| items.par_iter().map(|(_, it)| measure(it)).collect()),
        None => items.par_iter().map(|(_, it)| measure(it)).collect(),
    };

    let mut counterexamples = Vec::new();
    let mut high: Option<Rational> = None;
    let mut low: Option<i64> = None;
    let mut applies = 0u64;
    for ((index, item), result) in items.iter().zip(results) {
        let m = result?;
        if let Some(verdict) = m.counterexample {
            if !recount_fails(config.conjecture, item) {
                return Err(LabError::Unverified(format!("instance {index}: {}", item.json())));
            }
            counterexamples.push(Counterexample { index: *index, instance: item.json(), verdict });
        }
        high = high.max(m.high);
        low = match (low, m.low) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        applies += m.applies;
    }

    let mut extremes = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        extremes.insert(k.to_string(), v);
    };
    match config.conjecture {
        ConjectureId::Treesconj0 => {
            if let Some(h) = high {
                put("max_optimum_total", h.to_string());
            }
        }
        ConjectureId::Equirep00 => {
            if let Some(l) = low {
                put("min_slack", l.to_string());
            }
        }
        ConjectureId::Stein => {
            if let Some(l) = low {
                put("min_max_parts", l.to_string());
            }
        }
        ConjectureId::Rainbow => put("hypothesis_met", applies.to_string()),
        ConjectureId::Underrep => {
            if let Some(h) = high {
                put("max_min_c", h.to_string());
            }
        }
        ConjectureId::PrefixFair => {}
    }
    let mut notes = Vec::new();
    if config.conjecture == ConjectureId::Rainbow {
        notes.push("hosts are simple bipartite graphs; multigraph hosts are not enumerated".to_string());
    }
    if config.mode == SweepMode::Exhaustive && config.conjecture == ConjectureId::Equirep00 {
        notes.push("one matrix per class under row and column permutations, part renaming and transposition".into());
    }
    Ok(SweepOutcome {
        config: config.clone(),
        family: config.conjecture.family(),
        notes,
        instances: items.len() as u64,
        counterexamples,
        extremes,
    })
}

fn exhaustive_family(config: &SweepConfig) -> Result<Vec<(u64, Item)>, LabError> {
    let (n, m) = (config.n, config.m);
    let mut items = Vec::new();
    match config.conjecture {
        ConjectureId::Treesconj0 => {
            for_each_labelling(n, m, config.budget, |labels| {
                let p = VertexPartition::new(GraphKind::Path, 2, labels.to_vec()).expect("labelling uses every class");
                items.push(Item::Path(p));
            })?;
        }
        ConjectureId::Equirep00 => {
            // An empty relaxed part would turn the statement into an exact two-part one.
            for_each_matrix_up_to_symmetry(n, m, config.budget, |a| {
                if a.sizes().iter().all(|&s| s > 0) {
                    items.push(Item::Matrix(a));
                }
            })?;
        }
        ConjectureId::Stein => {
            for_each_matrix_up_to_symmetry(n, n, config.budget, |a| {
                if a.sizes().iter().all(|&s| s == n) {
                    items.push(Item::Matrix(a));
                }
            })?;
        }
        ConjectureId::Rainbow | ConjectureId::Underrep | ConjectureId::PrefixFair => {
            let cells = n * n;
            let estimate = ((m + 1) as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
            if estimate > config.budget {
                return Err(LabError::BudgetExceeded { estimate, budget: config.budget });
            }
            let mut code = vec![0usize; cells];
            loop {
                items.push(Item::Graph(graph_from_cells(n, m, &code)?));
                let Some(pos) = (0..cells).find(|&c| code[c] < m) else { break };
                code[pos] += 1;
                code[..pos].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    Ok(items.into_iter().enumerate().map(|(i, it)| (i as u64, it)).collect())
}

/// Cell `(u, v)` holds `0` for no edge or `l + 1` for an edge in set `l`.
fn graph_from_cells(n: usize, m: usize, code: &[usize]) -> Result<LabelledGraph, LabError> {
    let edges = (0..n * n).filter(|&c| code[c] > 0).map(|c| (c / n, c % n, code[c] - 1)).collect();
    LabelledGraph::new(n, n, m, edges)
}

/// Sample `index` of the seeded stream; independent of thread scheduling.
fn random_item(config: &SweepConfig, index: u64) -> Result<Item, LabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let (n, m) = (config.n, config.m);
    Ok(match config.conjecture {
        ConjectureId::Treesconj0 => {
            if m > n {
                return Err(LabError::Invalid(format!("a path on {n} vertices cannot use {m} classes")));
            }
            // Every class once, the rest uniform, then shuffled.
            let mut labels: Vec<usize> = (0..m).chain((m..n).map(|_| rng.gen_range(0..m))).collect();
            labels.shuffle(&mut rng);
            Item::Path(VertexPartition::new(GraphKind::Path, 2, labels)?)
        }
        ConjectureId::Equirep00 => {
            if m > n * n {
                return Err(LabError::Invalid(format!("an {n}×{n} matrix cannot have {m} nonempty parts")));
            }
            let mut cells: Vec<usize> = (0..m).chain((m..n * n).map(|_| rng.gen_range(0..m))).collect();
            cells.shuffle(&mut rng);
            Item::Matrix(ColorMatrix::from_fn(n, m, false, |i, j| cells[i * n + j])?)
        }
        ConjectureId::Stein => {
            let mut cells: Vec<usize> = (0..n * n).map(|c| c / n).collect();
            cells.shuffle(&mut rng);
            Item::Matrix(ColorMatrix::from_fn(n, n, false, |i, j| cells[i * n + j])?)
        }
        ConjectureId::Rainbow | ConjectureId::Underrep | ConjectureId::PrefixFair => {
            let code: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..=m)).collect();
            Item::Graph(graph_from_cells(n, m, &code)?)
        }
    })
}

fn measure(conjecture: ConjectureId, item: &Item) -> Result<Measure, LabError> {
    let mut out = Measure::default();
    match (conjecture, item) {
        (ConjectureId::Treesconj0, Item::Path(p)) => {
            let v = check_treesconj0(p, OracleCaps::default())?;
            out.high = Some(v.optimum_total);
            if !v.holds {
                out.counterexample = Some(to_json(&v));
            }
        }
        (ConjectureId::Equirep00, Item::Matrix(a)) => {
            let all = check_equirep00_all(a)?;
            let n = a.n();
            let floors: Vec<i64> = a.sizes().iter().map(|&e| (e / n) as i64).collect();
            // Slack of the first witness for each relaxed part.
            out.low = all
                .iter()
                .filter_map(|v| {
                    let counts = v.witness_counts.as_ref()?;
                    let j = v.j - 1;
                    Some(
                        (0..floors.len())
                            .map(|i| counts[i] as i64 + i64::from(i == j) - floors[i])
                            .min()
                            .unwrap_or(0),
                    )
                })
                .min();
            let failing: Vec<_> = all.into_iter().filter(|v| !v.holds).collect();
            if !failing.is_empty() {
                out.counterexample = Some(to_json(&failing));
            }
        }
        (ConjectureId::Stein, Item::Matrix(a)) => {
            let v = check_stein(a)?;
            out.low = Some(v.max_parts as i64);
            if !v.holds {
                out.counterexample = Some(to_json(&v));
            }
        }
        (ConjectureId::Rainbow, Item::Graph(g)) => {
            let v = check_rainbow(g, GRAPH_BUDGET)?;
            if v.hypothesis {
                out.applies = 1;
                if !v.holds {
                    out.counterexample = Some(to_json(&v));
                }
            }
        }
        (ConjectureId::Underrep, Item::Graph(g)) => {
            let v = check_underrep(g, GRAPH_BUDGET)?;
            out.high = Some(v.min_c);
            if !v.holds {
                out.counterexample = Some(to_json(&v));
            }
        }
        (ConjectureId::PrefixFair, Item::Graph(g)) => {
            let v = check_prefix_fair(g, GRAPH_BUDGET)?;
            if !v.holds {
                out.counterexample = Some(to_json(&v));
            }
        }
        _ => return Err(LabError::Invalid(format!("{conjecture} does not apply to this instance type"))),
    }
    Ok(out)
}

/// Second opinion from [`crate::verify`]: does the instance really fail?
fn recount_fails(conjecture: ConjectureId, item: &Item) -> bool {
    match (conjecture, item) {
        (ConjectureId::Treesconj0, Item::Path(p)) => !verify::treesconj0_holds(p),
        (ConjectureId::Equirep00, Item::Matrix(a)) => (0..a.m()).any(|j| !verify::equirep00_holds(a, j)),
        (ConjectureId::Stein, Item::Matrix(a)) => verify::stein_max_parts(a) + 1 < a.n(),
        (ConjectureId::Rainbow, Item::Graph(g)) => !verify::rainbow_exists(g),
        (ConjectureId::Underrep, Item::Graph(g)) => {
            let (num, delta) = verify::underrep_min_c(g);
            Rational::new(num as i64, delta as i64) > Rational::new(g.m() as i64, 2)
        }
        (ConjectureId::PrefixFair, Item::Graph(g)) => !verify::prefix_fair_holds(g),
        _ => false,
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("verdict serializes")
}
