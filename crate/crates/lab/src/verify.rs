//! Second, independently written deciders used to re-verify counterexamples
//! before a sweep reports them. They share no search code with
//! [`crate::conjectures`].

use fairrep_core::{ColorMatrix, VertexPartition};

use crate::graph::LabelledGraph;

/// Bitmask enumeration of vertex subsets of a path.
pub fn treesconj0_holds(instance: &VertexPartition) -> bool {
    let n = instance.n();
    assert!(n <= 26, "bitmask recount is for small paths");
    let labels = instance.classes();
    let sizes = instance.class_sizes();
    let m = sizes.len();
    (0u32..1 << n).any(|mask| {
        if mask & (mask >> 1) != 0 {
            return false;
        }
        let mut count = vec![0usize; m];
        for (v, &c) in labels.iter().enumerate() {
            if mask >> v & 1 == 1 {
                count[c] += 1;
            }
        }
        let doubled: Vec<usize> = (0..m).map(|i| sizes[i].saturating_sub(2 * count[i])).collect();
        doubled.iter().sum::<usize>() <= m && doubled.iter().all(|&b| b <= 2)
    })
}

/// Row-by-row backtracking over free columns.
fn any_matching(a: &ColorMatrix, accept: &dyn Fn(&[usize]) -> bool) -> bool {
    fn rec(a: &ColorMatrix, row: usize, used: u32, counts: &mut Vec<usize>, accept: &dyn Fn(&[usize]) -> bool) -> bool {
        if row == a.n() {
            return accept(counts);
        }
        for col in 0..a.n() {
            if used >> col & 1 == 0 {
                let part = a.get(row, col);
                counts[part] += 1;
                let ok = rec(a, row + 1, used | 1 << col, counts, accept);
                counts[part] -= 1;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(a, 0, 0, &mut vec![0; a.m()], accept)
}

/// Whether the relaxed-part statement holds for part `j`.
pub fn equirep00_holds(a: &ColorMatrix, j: usize) -> bool {
    let n = a.n();
    let floors: Vec<usize> = a.sizes().iter().map(|&e| e / n).collect();
    any_matching(a, &|counts| (0..counts.len()).all(|i| counts[i] + usize::from(i == j) >= floors[i]))
}

/// Most distinct parts met by a perfect matching.
pub fn stein_max_parts(a: &ColorMatrix) -> usize {
    (1..=a.n())
        .rev()
        .find(|&k| any_matching(a, &|counts| counts.iter().filter(|&&c| c > 0).count() >= k))
        .unwrap_or(0)
}

/// Odometer over one edge per set.
pub fn rainbow_exists(g: &LabelledGraph) -> bool {
    let m = g.m();
    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (e, &l) in g.labels().iter().enumerate() {
        classes[l].push(g.edges()[e]);
    }
    if classes.iter().any(Vec::is_empty) {
        return m == 0;
    }
    let mut idx = vec![0usize; m];
    loop {
        let chosen: Vec<(usize, usize)> = (0..m).map(|l| classes[l][idx[l]]).collect();
        let disjoint = (0..m).all(|x| (x + 1..m).all(|y| chosen[x].0 != chosen[y].0 && chosen[x].1 != chosen[y].1));
        if disjoint {
            return true;
        }
        let Some(pos) = (0..m).find(|&l| idx[l] + 1 < classes[l].len()) else { return false };
        idx[pos] += 1;
        for x in &mut idx[..pos] {
            *x = 0;
        }
    }
}

/// Every matching, found by giving each left vertex a right partner or none.
fn all_matchings(g: &LabelledGraph) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.left()];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        adj[u].push(e);
    }
    let mut out = Vec::new();
    fn rec(u: usize, g: &LabelledGraph, adj: &[Vec<usize>], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if u == adj.len() {
            out.push(cur.clone());
            return;
        }
        rec(u + 1, g, adj, used, cur, out);
        for &e in &adj[u] {
            let v = g.edges()[e].1;
            if !used[v] {
                used[v] = true;
                cur.push(e);
                rec(u + 1, g, adj, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(0, g, &adj, &mut vec![false; g.right()], &mut Vec::new(), &mut out);
    out
}

/// `(max(0, |E| − Δ|S|), Δ)` for the largest capped matching `S`; the
/// minimal constant is their quotient.
pub fn underrep_min_c(g: &LabelledGraph) -> (usize, usize) {
    let delta = g.max_degree();
    if delta == 0 {
        return (0, 1);
    }
    let sizes = g.label_sizes();
    let best = all_matchings(g)
        .into_iter()
        .filter(|s| {
            let mut per = vec![0usize; g.m()];
            s.iter().for_each(|&e| per[g.labels()[e]] += 1);
            per.iter().zip(&sizes).all(|(&c, &sz)| c * delta < sz + delta)
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0);
    (g.edge_count().saturating_sub(delta * best), delta)
}

pub fn prefix_fair_holds(g: &LabelledGraph) -> bool {
    let delta = g.max_degree().max(1);
    let k = g.m();
    all_matchings(g).into_iter().any(|s| {
        (0..k).all(|j| {
            let in_m = s.iter().filter(|&&e| g.labels()[e] <= j).count();
            let in_e = g.labels().iter().filter(|&&l| l <= j).count();
            in_m * delta + delta > in_e
        })
    })
}
