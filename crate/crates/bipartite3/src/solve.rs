//! The three-part solver: pad to multiples of `n`, build and search the disk,
//! resolve, and check the bounds on the original matrix.

use fairrep_core::{
    assignment::max_weight_assignment, bipartite_report, ColorMatrix, Permutation, Report,
};
use serde::Serialize;

use crate::disk::{boundary_winding, build_disk, find_rainbow, DiskOutcome};
use crate::resolve::{resolve_triangle, ResolveRoute};
use crate::shift::shift_toward;
use crate::{Balanced, Bip3Error};

/// Largest `n` for which the final fallback enumerates all permutations.
pub const EXHAUSTIVE_CAP: usize = 8;

/// How the returned permutation was reached after padding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PaddingRoute {
    /// The first padding already gave a permutation within the original bounds.
    Direct,
    /// The `t`-th alternative padding did.
    Repadded(usize),
    /// A search within distance 5 of the best candidate did.
    LocalRepair,
    /// Enumeration of all permutations did.
    Exhaustive,
}

/// What happened while solving, for reporting and sweeps.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Trace {
    /// `k_ℓ` after padding.
    pub padded_k: [usize; 3],
    /// Cells recoloured by the padding, as `(row, col, from, to)`, 0-based.
    pub moved: Vec<MovedCell>,
    /// Set when a padded part is empty and the two-part walk was used.
    pub two_part_walk: bool,
    pub disk_vertices: usize,
    pub disk_triangles: usize,
    pub boundary_len: usize,
    /// `Err` carries the first failed disk invariant.
    pub disk_valid: Option<Result<(), String>>,
    pub winding: Option<i64>,
    pub outcome: Option<&'static str>,
    pub resolve_route: Option<ResolveRoute>,
    /// Times the distance-5 search inside the resolution step was needed.
    pub safety_net: usize,
    pub padding: Option<PaddingRoute>,
    /// Paddings tried before one worked.
    pub paddings_tried: usize,
}

#[derive(Debug, Clone)]
pub struct ThreeSolution {
    pub perm: Permutation,
    pub report: Report,
    pub trace: Trace,
}

/// `⌊e/n⌋ − 1 ≤ count ≤ ⌈e/n⌉ + 1` for every part of `a`.
pub fn within_bounds(a: &ColorMatrix, sigma: &Permutation) -> bool {
    let n = a.n();
    a.counts(sigma).iter().zip(a.sizes()).all(|(&c, &e)| c + 1 >= e / n && c <= e.div_ceil(n) + 1)
}

/// One way of recolouring cells so every part size becomes a multiple of `n`.
#[derive(Debug, Clone)]
struct Padding {
    k: [usize; 3],
    moved: Vec<MovedCell>,
}

impl Padding {
    fn apply(&self, a: &ColorMatrix) -> Result<ColorMatrix, Bip3Error> {
        let cells: Vec<(usize, usize, usize)> = self.moved.iter().map(|&(i, j, _, to)| (i, j, to)).collect();
        Ok(a.with_cells(&cells)?.with_allow_empty(true)?)
    }
}

/// All paddings this solver tries, best first. Each rounds a set of parts
/// up and moves cells out of the others, preferring cells on one line so a
/// permutation meets few moved cells.
fn paddings(a: &ColorMatrix) -> Vec<Padding> {
    let n = a.n();
    let e = a.sizes();
    let q: Vec<usize> = e.iter().map(|&x| x / n).collect();
    let short = n - q.iter().sum::<usize>();
    let rem: Vec<usize> = e.iter().map(|&x| x % n).collect();
    let mut ups: Vec<Vec<usize>> = Vec::new();
    for mask in 0u8..8 {
        let set: Vec<usize> = (0..3).filter(|&l| mask >> l & 1 == 1).collect();
        if set.len() == short && set.iter().all(|&l| rem[l] > 0) {
            ups.push(set);
        }
    }
    let lines: Vec<(bool, usize)> = (0..n).flat_map(|x| [(true, x), (false, x)]).collect();
    let mut out: Vec<(usize, Padding)> = Vec::new();
    for up in &ups {
        let mut k = [q[0], q[1], q[2]];
        let mut need = [0usize; 3];
        let mut give = [0usize; 3];
        for l in 0..3 {
            if up.contains(&l) {
                k[l] += 1;
                need[l] = n - rem[l];
            } else {
                give[l] = rem[l];
            }
        }
        for &(by_row, line) in &lines {
            let on_line = |i: usize, j: usize| if by_row { i == line } else { j == line };
            let mut order: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
            order.sort_by_key(|&(i, j)| (!on_line(i, j), i, j));
            let mut need = need;
            let mut give = give;
            let mut moved = Vec::new();
            let mut off_line = 0;
            for (i, j) in order {
                let from = a.get(i, j);
                if give[from] == 0 {
                    continue;
                }
                let Some(to) = (0..3).find(|&l| need[l] > 0) else { break };
                give[from] -= 1;
                need[to] -= 1;
                off_line += usize::from(!on_line(i, j));
                moved.push((i, j, from, to));
            }
            out.push((off_line, Padding { k, moved }));
        }
    }
    if ups.is_empty() {
        out.push((0, Padding { k: [q[0], q[1], q[2]], moved: vec![] }));
    }
    out.sort_by_key(|(off, _)| *off);
    out.into_iter().map(|(_, p)| p).collect()
}

/// A recoloured cell: row, column, old part, new part.
pub type MovedCell = (usize, usize, usize, usize);

/// The first padding: recoloured matrix, `k_ℓ`, and moved cells.
pub fn pad_to_multiples(a: &ColorMatrix) -> Result<(ColorMatrix, [usize; 3], Vec<MovedCell>), Bip3Error> {
    require_three(a)?;
    let p = paddings(a).into_iter().next().expect("at least one padding");
    Ok((p.apply(a)?, p.k, p.moved))
}

fn require_three(a: &ColorMatrix) -> Result<(), Bip3Error> {
    if a.m() != 3 {
        return Err(Bip3Error::PreconditionViolation(format!("expected 3 parts, got {}", a.m())));
    }
    Ok(())
}

/// Balanced matrix with an empty part: walk from the fewest to the most
/// edges of one nonempty part until its count is within one of its quota.
fn two_part_walk(m: &Balanced) -> Result<Permutation, Bip3Error> {
    let n = m.n();
    let u = (0..3).find(|&l| m.k()[l] > 0).expect("n ≥ 1");
    let weight = |i: usize, j: usize| i64::from(m.part(i, j) == u);
    let (lo, _) = max_weight_assignment(n, |i, j| -weight(i, j));
    let (hi, _) = max_weight_assignment(n, weight);
    let mut cur = lo;
    while !m.is_solution(&cur) {
        let Some(&j) = cur.disagreements(&hi).first() else {
            return Err(Bip3Error::Internal(format!("two-part walk reached the maximum without meeting k = {:?}", m.k())));
        };
        cur = shift_toward(&cur, &hi, j);
    }
    Ok(cur)
}

/// Solves a balanced matrix through the disk.
fn solve_balanced(m: &Balanced, trace: &mut Trace) -> Result<Permutation, Bip3Error> {
    if m.k().contains(&0) {
        trace.two_part_walk = true;
        return two_part_walk(m);
    }
    let disk = build_disk(m)?;
    trace.disk_vertices = disk.vertices.len();
    trace.disk_triangles = disk.triangles.len();
    trace.boundary_len = disk.boundary.len();
    let valid = disk.validate(m);
    trace.disk_valid = Some(valid.clone());
    if let Err(e) = valid {
        return Err(Bip3Error::Internal(format!("disk invariant failed: {e}")));
    }
    trace.winding = boundary_winding(m, &disk);
    let (perm, route) = match find_rainbow(m, &disk)? {
        DiskOutcome::EarlyExit(p) => {
            trace.outcome = Some("early_exit");
            (p, ResolveRoute::Direct)
        }
        DiskOutcome::BoundarySolution(p) => {
            trace.outcome = Some("boundary_solution");
            (p, ResolveRoute::Direct)
        }
        DiskOutcome::Rainbow(tri) => {
            trace.outcome = Some("rainbow");
            resolve_triangle(m, &tri)?
        }
        DiskOutcome::BoundaryPair([p, q]) => {
            trace.outcome = Some("boundary_pair");
            resolve_triangle(m, &[p.clone(), q, p])?
        }
    };
    if route == ResolveRoute::SafetyNet {
        trace.safety_net += 1;
    }
    trace.resolve_route = Some(route);
    Ok(perm)
}

/// Perfect matching of `K_{n,n}` with `⌊|E_ℓ|/n⌋ − 1 ≤ count_ℓ ≤ ⌈|E_ℓ|/n⌉ + 1`
/// for each of the three parts.
pub fn solve_three(a: &ColorMatrix) -> Result<ThreeSolution, Bip3Error> {
    require_three(a)?;
    let n = a.n();
    let mut first: Option<(Permutation, Trace)> = None;
    let mut safety_net = 0;
    for (t, pad) in paddings(a).into_iter().enumerate() {
        let balanced = Balanced::new(pad.apply(a)?)?;
        let mut attempt = Trace { padded_k: pad.k, moved: pad.moved, ..Trace::default() };
        let perm = solve_balanced(&balanced, &mut attempt)?;
        safety_net += attempt.safety_net;
        if within_bounds(a, &perm) {
            attempt.safety_net = safety_net;
            attempt.paddings_tried = t + 1;
            attempt.padding = Some(if t == 0 { PaddingRoute::Direct } else { PaddingRoute::Repadded(t) });
            return finish(a, perm, attempt);
        }
        if first.is_none() {
            first = Some((perm, attempt));
        }
    }
    let (start, mut trace) = first.expect("at least one padding");
    trace.safety_net = safety_net;
    let ok = |p: &Permutation| within_bounds(a, p);
    let positions: Vec<usize> = (0..n).collect();
    for size in 1..=5.min(n) {
        for pos in combinations(&positions, size) {
            if let Some(p) = rearrangement(&start, &pos, ok) {
                trace.padding = Some(PaddingRoute::LocalRepair);
                return finish(a, p, trace);
            }
        }
    }
    if n <= EXHAUSTIVE_CAP {
        if let Some(p) = Permutation::all(n).find(|p| ok(p)) {
            trace.padding = Some(PaddingRoute::Exhaustive);
            return finish(a, p, trace);
        }
    }
    Err(Bip3Error::SearchExhausted(format!("no permutation within the bounds for sizes {:?}", a.sizes())))
}

fn finish(a: &ColorMatrix, perm: Permutation, trace: Trace) -> Result<ThreeSolution, Bip3Error> {
    let report = bipartite_report(a, &perm)?;
    Ok(ThreeSolution { perm, report, trace })
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (x, &v) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[x + 1..], k - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn rearrangement(base: &Permutation, positions: &[usize], f: impl Fn(&Permutation) -> bool) -> Option<Permutation> {
    let values: Vec<usize> = positions.iter().map(|&p| base.get(p)).collect();
    let mut order = Permutation::identity(positions.len());
    loop {
        let mut map = base.as_slice().to_vec();
        for (k, &p) in positions.iter().enumerate() {
            map[p] = values[order.get(k)];
        }
        let cand = Permutation::new(map).expect("rearranged bijection");
        if f(&cand) {
            return Some(cand);
        }
        if !order.next_lex() {
            return None;
        }
    }
}
