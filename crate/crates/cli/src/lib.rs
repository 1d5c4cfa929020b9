//! The `fairrep` command line: parse and validate an instance, dispatch to a
//! solver, check or sweep, and render the result.
//!
//! Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input
//! error, 3 internal invariant violation.

pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fairrep_bipartite2::{achievable_counts_exhaustive, almost_fair_two, check_rigidity, exact_count_matching, Bip2Error};
use fairrep_bipartite3::{build_disk, pad_to_multiples, solve_three, Balanced, Bip3Error};
use fairrep_core::{
    parse_instance, ColorMatrix, CoreError, GraphKind, Instance, Permutation, Report, VertexPartition,
};
use fairrep_interval::{
    cycle_exact_targets, oracle_optimum, solve_cycle_exact, solve_cycle_individual, solve_dhw, solve_path_total,
    solve_power_cycle, IntervalError, OracleCaps,
};
use fairrep_lab::{
    check_equirep00, check_equirep00_all, check_prefix_fair, check_rainbow, check_stein, check_treesconj0,
    check_underrep, fixture, parse_fixture_text, render_fixture_instance, run_sweep, ConjectureId, FixtureInstance,
    LabError, LabelledGraph, SweepConfig, SweepMode, FIXTURES, GRAPH_BUDGET,
};
use render::{join, render_report, table, Format};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fairrep", version, about = "Fair representation by independent sets and perfect matchings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Instance file (`-` for standard input).
    #[arg(long = "in", value_name = "FILE", conflicts_with = "instance")]
    pub input: Option<PathBuf>,
    /// Inline instance JSON.
    #[arg(long)]
    pub instance: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a representative for an instance.
    Solve {
        target: SolveTarget,
        #[command(flatten)]
        input: Input,
        /// Exact per-class counts for `cycle`, comma separated.
        #[arg(long, value_delimiter = ',')]
        targets: Option<Vec<usize>>,
        /// Vertex (1-based) the `cycle` solution must avoid.
        #[arg(long)]
        avoid: Option<usize>,
        /// Exact number of edges from part 1 for `bipartite2`.
        #[arg(long)]
        count: Option<usize>,
        /// Write the simplicial disk built by `bipartite3` to this file.
        #[arg(long, value_name = "FILE")]
        emit_disk: Option<PathBuf>,
    },
    /// Decide a property of one instance.
    Check {
        target: CheckTarget,
        #[command(flatten)]
        input: Input,
        /// Relaxed part (1-based) for `equirep00`; every part when omitted.
        #[arg(long)]
        j: Option<usize>,
        /// Node budget for graph searches.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a conjecture over a family of small instances.
    Sweep {
        #[arg(long, value_parser = parse_conjecture)]
        conjecture: ConjectureId,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads.
        #[arg(long)]
        workers: Option<usize>,
        /// Largest family an exhaustive sweep may enumerate.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
    /// Named instances with known verdicts.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Exhaustive optimum for an instance.
    Oracle {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveTarget {
    Path,
    Cycle,
    PowerCycle,
    Dhw,
    Bipartite2,
    Bipartite3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckTarget {
    Rigidity,
    Treesconj0,
    Equirep00,
    Stein,
    Rainbow,
    Underrep,
    PrefixFair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    /// Names, files and descriptions.
    List,
    /// Recompute verdicts (all fixtures when no name is given).
    Run { names: Vec<String> },
    /// Print a fixture's canonical JSON.
    Show { name: String },
}

fn parse_conjecture(s: &str) -> Result<ConjectureId, String> {
    s.parse().map_err(|e: LabError| e.to_string())
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::InvalidSolution(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<IntervalError> for Failure {
    fn from(e: IntervalError) -> Self {
        let code = match &e {
            IntervalError::Internal(_) => EXIT_INTERNAL,
            IntervalError::Core(CoreError::InvalidSolution(_)) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<Bip2Error> for Failure {
    fn from(e: Bip2Error) -> Self {
        let code = match &e {
            Bip2Error::RigidInfeasible { .. } | Bip2Error::Infeasible { .. } | Bip2Error::OutOfRange { .. } => {
                EXIT_FALSE
            }
            Bip2Error::SearchExhausted(_) => EXIT_INTERNAL,
            Bip2Error::Core(CoreError::InvalidSolution(_)) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<Bip3Error> for Failure {
    fn from(e: Bip3Error) -> Self {
        let code = match &e {
            Bip3Error::PreconditionViolation(_) => EXIT_USAGE,
            Bip3Error::Core(c) if !matches!(c, CoreError::InvalidSolution(_)) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        match e {
            LabError::Unverified(_) => Self { code: EXIT_INTERNAL, message: e.to_string() },
            LabError::Interval(i) => i.into(),
            LabError::Bipartite2(b) => b.into(),
            LabError::Core(c) => c.into(),
            _ => Self::usage(e.to_string()),
        }
    }
}

/// Rendered result and exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command; all
/// output goes to `stdout`/`stderr` or the `--out` file.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(out) => match &cli.out {
            Some(path) => match std::fs::write(path, &out.text) {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    EXIT_USAGE
                }
            },
            None => {
                print!("{}", out.text);
                out.code
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Solve { target, input, targets, avoid, count, emit_disk } => {
            let inst = read_instance(input)?;
            solve(*target, inst, targets.as_deref(), *avoid, *count, emit_disk.as_ref(), fmt)
        }
        Command::Check { target, input, j, budget } => check(*target, input, *j, budget.unwrap_or(GRAPH_BUDGET), fmt),
        Command::Sweep { conjecture, n, m, mode, samples, seed, workers, budget } => {
            let mode = match mode {
                Mode::Exhaustive => SweepMode::Exhaustive,
                Mode::Random => SweepMode::Random,
            };
            let mut config = SweepConfig::new(*conjecture, *n, *m, mode);
            config.samples = *samples;
            config.seed = *seed;
            config.workers = *workers;
            config.budget = *budget;
            let outcome = run_sweep(&config)?;
            let code = if outcome.counterexamples.is_empty() { EXIT_OK } else { EXIT_FALSE };
            let text = match fmt {
                Format::Json => pretty(&outcome),
                Format::Table => {
                    let mut out = format!(
                        "conjecture: {}\nfamily: {}\nmode: {:?}, n = {}, m = {}, seed = {}\n",
                        config.conjecture, outcome.family, config.mode, config.n, config.m, config.seed
                    );
                    for note in &outcome.notes {
                        out.push_str(&format!("note: {note}\n"));
                    }
                    out.push_str(&format!("instances: {}\ncounterexamples: {}\n", outcome.instances, outcome.counterexamples.len()));
                    for (k, v) in &outcome.extremes {
                        out.push_str(&format!("{k}: {v}\n"));
                    }
                    for c in &outcome.counterexamples {
                        out.push_str(&format!("counterexample {}: {}\n", c.index, c.instance));
                    }
                    out
                }
            };
            Ok(Output { text, code })
        }
        Command::Fixtures { action } => fixtures(action, fmt),
        Command::Oracle { input } => oracle(read_instance(input)?, fmt),
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes") + "\n"
}

fn read_text(input: &Input) -> Result<String, Failure> {
    match (&input.input, &input.instance) {
        (_, Some(text)) => Ok(text.clone()),
        (Some(path), None) if path.as_os_str() == "-" => {
            std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))
        }
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display()))),
        (None, None) => Err(Failure::usage("an instance is required (--in FILE or --instance JSON)")),
    }
}

fn read_instance(input: &Input) -> Result<Instance, Failure> {
    Ok(parse_instance(&read_text(input)?)?)
}

fn interval(inst: Instance, kind: GraphKind) -> Result<VertexPartition, Failure> {
    match inst {
        Instance::Interval(p) if p.kind() == kind => Ok(p),
        Instance::Interval(p) => Err(Failure::usage(format!("expected a {kind:?} instance, got {:?}", p.kind()))),
        Instance::Bipartite(_) => Err(Failure::usage(format!("expected a {kind:?} instance, got a bipartite one"))),
    }
}

fn matrix(inst: Instance) -> Result<ColorMatrix, Failure> {
    match inst {
        Instance::Bipartite(a) => Ok(a),
        Instance::Interval(p) => Err(Failure::usage(format!("expected a bipartite instance, got a {:?}", p.kind()))),
    }
}

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn set_output(set: &[usize], report: &Report, extra: Value, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let mut v = json!({ "set": one_based(set), "report": report });
            merge(&mut v, extra);
            pretty(&v)
        }
        Format::Table => format!("set: {}\n{}", join(&one_based(set)), render_report(report, fmt)),
    }
}

fn perm_output(perm: &Permutation, report: &Report, extra: Value, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let mut v = json!({ "perm": perm.to_one_based(), "report": report });
            merge(&mut v, extra);
            pretty(&v)
        }
        Format::Table => format!("perm: {}\n{}", join(&perm.to_one_based()), render_report(report, fmt)),
    }
}

fn merge(into: &mut Value, extra: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, extra) {
        a.extend(b);
    }
}

fn solve(
    target: SolveTarget,
    inst: Instance,
    targets: Option<&[usize]>,
    avoid: Option<usize>,
    count: Option<usize>,
    emit_disk: Option<&PathBuf>,
    fmt: Format,
) -> Result<Output, Failure> {
    let ok = |text| Ok(Output { text, code: EXIT_OK });
    let unused = |flag: &str, set: bool| {
        if set {
            Err(Failure::usage(format!("{flag} does not apply to solve {target:?}")))
        } else {
            Ok(())
        }
    };
    unused("--targets", targets.is_some() && target != SolveTarget::Cycle)?;
    unused("--avoid", avoid.is_some() && target != SolveTarget::Cycle)?;
    unused("--count", count.is_some() && target != SolveTarget::Bipartite2)?;
    unused("--emit-disk", emit_disk.is_some() && target != SolveTarget::Bipartite3)?;
    match target {
        SolveTarget::Path => {
            let p = interval(inst, GraphKind::Path)?;
            let sol = solve_path_total(&p)?;
            let extra = json!({ "origin": format!("{:?}", sol.origin), "cut_budget": sol.cut_budget });
            ok(set_output(sol.set.members(), &sol.report, extra, fmt))
        }
        SolveTarget::Cycle => {
            let c = interval(inst, GraphKind::Cycle)?;
            match (targets, avoid) {
                (Some(_), Some(_)) => Err(Failure::usage("--targets and --avoid cannot be combined")),
                (Some(t), None) => {
                    let set = solve_cycle_exact(&c, t)?;
                    let report = fairrep_core::interval_report(&c, set.members())?;
                    ok(set_output(set.members(), &report, json!({ "targets": cycle_exact_targets(&c)? }), fmt))
                }
                (None, avoid) => {
                    let v = match avoid {
                        Some(0) => return Err(Failure::usage("--avoid is 1-based")),
                        v => v.map(|v| v - 1),
                    };
                    let sol = solve_cycle_individual(&c, v)?;
                    let extra = json!({
                        "deleted": one_based(&sol.contraction.deleted),
                        "targets": sol.contraction.targets,
                    });
                    ok(set_output(sol.set.members(), &sol.report, extra, fmt))
                }
            }
        }
        SolveTarget::PowerCycle => {
            let q = interval(inst, GraphKind::PowerCycle)?;
            let sol = solve_power_cycle(&q)?;
            let extra = json!({ "targets": sol.targets, "deleted": one_based(&sol.deleted) });
            ok(set_output(sol.set.members(), &sol.report, extra, fmt))
        }
        SolveTarget::Dhw => {
            let c = interval(inst, GraphKind::Cycle)?;
            let (a, b) = solve_dhw(&c)?;
            let text = match fmt {
                Format::Json => pretty(&json!({ "first": a.to_one_based(), "second": b.to_one_based() })),
                Format::Table => format!("first: {}\nsecond: {}\n", join(&a.to_one_based()), join(&b.to_one_based())),
            };
            ok(text)
        }
        SolveTarget::Bipartite2 => {
            let a = matrix(inst)?;
            match count {
                Some(c) => {
                    let found = exact_count_matching(&a, c).map_err(|e| {
                        let f = Failure::from(e);
                        Failure { code: f.code, message: format!("count {c}: {}", f.message) }
                    })?;
                    let report = fairrep_core::bipartite_report(&a, &found.perm)?;
                    ok(perm_output(&found.perm, &report, json!({ "route": format!("{:?}", found.route) }), fmt))
                }
                None => {
                    let sol = almost_fair_two(&a)?;
                    ok(perm_output(&sol.perm, &sol.report, json!({ "fair": sol.fair }), fmt))
                }
            }
        }
        SolveTarget::Bipartite3 => {
            let a = matrix(inst)?;
            let sol = solve_three(&a)?;
            if let Some(path) = emit_disk {
                write_disk(&a, path)?;
            }
            ok(perm_output(&sol.perm, &sol.report, json!({ "trace": sol.trace }), fmt))
        }
    }
}

/// Dumps the disk of the padded instance: vertices (id, perm, color, row),
/// triangles, boundary cycle and hexagon arcs, all 1-based except ids.
fn write_disk(a: &ColorMatrix, path: &PathBuf) -> Result<(), Failure> {
    let (padded, _, _) = pad_to_multiples(a)?;
    let balanced = Balanced::new(padded)?;
    let disk = build_disk(&balanced)?;
    let mut v = serde_json::to_value(&disk).expect("disk serializes");
    if let Some(Value::Array(vertices)) = v.get_mut("vertices") {
        for (id, vertex) in vertices.iter_mut().enumerate() {
            if let Value::Object(o) = vertex {
                o.insert("id".into(), json!(id));
            }
        }
    }
    v["matrix"] = json!(balanced.matrix().one_based_rows());
    v["valid"] = json!(disk.validate(&balanced).err());
    std::fs::write(path, pretty(&v)).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn verdict_output<T: serde::Serialize>(holds: bool, verdict: &T, table_text: String, fmt: Format) -> Output {
    let text = match fmt {
        Format::Json => pretty(verdict),
        Format::Table => table_text,
    };
    Output { text, code: if holds { EXIT_OK } else { EXIT_FALSE } }
}

fn graph_input(input: &Input) -> Result<LabelledGraph, Failure> {
    match parse_fixture_text(&read_text(input)?)? {
        FixtureInstance::Graph(g) => Ok(g),
        FixtureInstance::Core(_) => Err(Failure::usage("expected a labelled graph {left, right, m, edges}")),
    }
}

fn check(target: CheckTarget, input: &Input, j: Option<usize>, budget: u64, fmt: Format) -> Result<Output, Failure> {
    match target {
        CheckTarget::Rigidity => {
            let a = matrix(read_instance(input)?)?;
            let cert = check_rigidity(&a)?;
            let k = cert.k.as_deref().map(one_based);
            let l = cert.l.as_deref().map(one_based);
            let witness = cert.witness.as_ref().map(|(s, t)| {
                json!({
                    "first": s.to_one_based(), "first_count": a.count_part(s, 0),
                    "second": t.to_one_based(), "second_count": a.count_part(t, 0),
                })
            });
            let v = json!({ "rigid": cert.rigid, "k": k, "l": l, "witness": witness });
            let mut t = format!("rigid: {}\n", cert.rigid);
            if let (Some(k), Some(l)) = (&k, &l) {
                t.push_str(&format!("K: {}\nL: {}\n", join(k), join(l)));
            }
            if let Some((s, u)) = &cert.witness {
                t.push_str(&format!(
                    "witness: {} meets F {} times, {} meets F {} times\n",
                    join(&s.to_one_based()),
                    a.count_part(s, 0),
                    join(&u.to_one_based()),
                    a.count_part(u, 0)
                ));
            }
            Ok(verdict_output(cert.rigid, &v, t, fmt))
        }
        CheckTarget::Treesconj0 => {
            let p = interval(read_instance(input)?, GraphKind::Path)?;
            let v = check_treesconj0(&p, OracleCaps::default())?;
            let t = format!(
                "holds: {}\nwitness: {}\nwitness Σb: {}\noptimum Σb: {}\n",
                v.holds,
                v.witness.as_deref().map_or("none".into(), join),
                v.witness_total,
                v.optimum_total
            );
            Ok(verdict_output(v.holds, &v, t, fmt))
        }
        CheckTarget::Equirep00 => {
            let a = matrix(read_instance(input)?)?;
            let all = match j {
                Some(0) => return Err(Failure::usage("--j is 1-based")),
                Some(j) => vec![check_equirep00(&a, j - 1)?],
                None => check_equirep00_all(&a)?,
            };
            let holds = all.iter().all(|v| v.holds);
            let rows: Vec<Vec<String>> = all
                .iter()
                .map(|v| {
                    vec![
                        v.j.to_string(),
                        v.holds.to_string(),
                        v.witness.as_deref().map_or("none".into(), join),
                        v.witness_counts.as_deref().map_or("none".into(), join),
                    ]
                })
                .collect();
            Ok(verdict_output(holds, &all, table(&["j", "holds", "witness", "counts"], &rows), fmt))
        }
        CheckTarget::Stein => {
            let a = matrix(read_instance(input)?)?;
            let v = check_stein(&a)?;
            let t = format!(
                "holds: {}\nfull transversal: {}\nmost parts met: {} of {}\nwitness: {}\n",
                v.holds,
                v.full_transversal,
                v.max_parts,
                a.n(),
                join(&v.witness)
            );
            Ok(verdict_output(v.holds, &v, t, fmt))
        }
        CheckTarget::Rainbow => {
            let g = graph_input(input)?;
            let v = check_rainbow(&g, budget)?;
            let t = format!(
                "note: simple hosts only\nholds: {}\nΔ: {}\nset sizes: {}\nhypothesis |E_i| ≥ Δ + 2: {}\n",
                v.holds,
                v.max_degree,
                join(&v.set_sizes),
                v.hypothesis
            );
            Ok(verdict_output(v.holds, &v, t, fmt))
        }
        CheckTarget::Underrep => {
            let g = graph_input(input)?;
            let v = check_underrep(&g, budget)?;
            let t = format!("holds: {}\nminimal c: {}\nbound m/2: {}\nbest matching size: {}\n", v.holds, v.min_c, v.bound, v.best_size);
            Ok(verdict_output(v.holds, &v, t, fmt))
        }
        CheckTarget::PrefixFair => {
            let g = graph_input(input)?;
            let v = check_prefix_fair(&g, budget)?;
            let t = format!("holds: {}\nquotas: {}\n", v.holds, join(&v.quotas));
            Ok(verdict_output(v.holds, &v, t, fmt))
        }
    }
}

fn fixtures(action: &FixturesAction, fmt: Format) -> Result<Output, Failure> {
    match action {
        FixturesAction::List => {
            let text = match fmt {
                Format::Json => pretty(
                    &FIXTURES
                        .iter()
                        .map(|f| json!({ "name": f.name, "file": f.file, "description": f.description }))
                        .collect::<Vec<_>>(),
                ),
                Format::Table => table(
                    &["name", "file", "description"],
                    &FIXTURES.iter().map(|f| vec![f.name.into(), f.file.into(), f.description.into()]).collect::<Vec<_>>(),
                ),
            };
            Ok(Output { text, code: EXIT_OK })
        }
        FixturesAction::Run { names } => {
            let chosen: Vec<_> = if names.is_empty() {
                FIXTURES.iter().collect()
            } else {
                names
                    .iter()
                    .map(|n| fixture(n).ok_or_else(|| Failure::usage(format!("unknown fixture {n:?}"))))
                    .collect::<Result<_, _>>()?
            };
            let mut results = Vec::new();
            for f in chosen {
                let inst = f.instance()?;
                let round_trip = parse_fixture_text(&render_fixture_instance(&inst))? == inst;
                let out = f.run()?;
                results.push((out, round_trip));
            }
            let all = results.iter().all(|(o, r)| o.passed && *r);
            let text = match fmt {
                Format::Json => pretty(
                    &results
                        .iter()
                        .map(|(o, r)| json!({ "name": o.name, "passed": o.passed, "round_trip": r, "summary": o.summary, "detail": o.detail }))
                        .collect::<Vec<_>>(),
                ),
                Format::Table => table(
                    &["name", "passed", "round_trip", "summary"],
                    &results
                        .iter()
                        .map(|(o, r)| vec![o.name.into(), o.passed.to_string(), r.to_string(), o.summary.clone()])
                        .collect::<Vec<_>>(),
                ),
            };
            Ok(Output { text, code: if all { EXIT_OK } else { EXIT_FALSE } })
        }
        FixturesAction::Show { name } => {
            let f = fixture(name).ok_or_else(|| Failure::usage(format!("unknown fixture {name:?}")))?;
            Ok(Output { text: render_fixture_instance(&f.instance()?) + "\n", code: EXIT_OK })
        }
    }
}

fn oracle(inst: Instance, fmt: Format) -> Result<Output, Failure> {
    let text = match &inst {
        Instance::Interval(p) => {
            let (set, opt) = oracle_optimum(p, OracleCaps::default())?;
            let report = fairrep_core::interval_report(p, &set)?;
            set_output(&set, &report, json!({ "optimum": opt.to_string() }), fmt)
        }
        Instance::Bipartite(a) if a.m() == 2 => {
            let counts: Vec<usize> = achievable_counts_exhaustive(a)?.into_iter().collect();
            match fmt {
                Format::Json => pretty(&json!({ "achievable_counts": counts })),
                Format::Table => format!("achievable counts of part 1: {}\n", join(&counts)),
            }
        }
        Instance::Bipartite(a) => {
            if a.n() > fairrep_lab::MATRIX_CAP {
                return Err(Failure::usage(format!("n = {} exceeds the enumeration cap {}", a.n(), fairrep_lab::MATRIX_CAP)));
            }
            let mut vectors: Vec<Vec<usize>> = Permutation::all(a.n()).map(|p| a.counts(&p)).collect();
            vectors.sort();
            vectors.dedup();
            match fmt {
                Format::Json => pretty(&json!({ "achievable_count_vectors": vectors })),
                Format::Table => table(
                    &["count vector"],
                    &vectors.iter().map(|v| vec![join(v)]).collect::<Vec<_>>(),
                ),
            }
        }
    };
    Ok(Output { text, code: EXIT_OK })
}
