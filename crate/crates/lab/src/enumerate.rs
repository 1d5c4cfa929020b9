//! Exhaustive instance families, reduced by symmetry where that is sound.

use fairrep_core::{ColorMatrix, Permutation};

use crate::LabError;

/// `C(a, b)` saturating at `u128::MAX`.
pub fn binomial(a: u128, b: u128) -> u128 {
    let b = b.min(a.saturating_sub(b));
    let mut r: u128 = 1;
    for i in 0..b {
        r = match r.checked_mul(a - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    r
}

/// Number of row multisets scanned by [`for_each_matrix_up_to_symmetry`].
pub fn matrix_family_size(n: usize, m: usize) -> u128 {
    let rows = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    binomial(rows.saturating_add(n as u128 - 1), n as u128)
}

/// Calls `visit` once per `n × n` matrix with entries in `0..m` up to row
/// and column permutations, renaming of the parts, and transposition. Empty
/// parts are allowed. Each class is represented by its lexicographically
/// least sorted row list.
pub fn for_each_matrix_up_to_symmetry(
    n: usize,
    m: usize,
    budget: u128,
    mut visit: impl FnMut(ColorMatrix),
) -> Result<u64, LabError> {
    if n == 0 || m == 0 {
        return Err(LabError::Invalid("need n ≥ 1 and m ≥ 1".into()));
    }
    let estimate = matrix_family_size(n, m);
    if estimate > budget {
        return Err(LabError::BudgetExceeded { estimate, budget });
    }
    let rows = m.pow(n as u32);
    let decode = |code: usize| -> Vec<usize> {
        let mut c = code;
        let mut row = vec![0; n];
        for x in (0..n).rev() {
            row[x] = c % m;
            c /= m;
        }
        row
    };
    let encode = |row: &[usize]| row.iter().fold(0usize, |acc, &x| acc * m + x);
    let col_perms: Vec<Permutation> = Permutation::all(n).collect();
    let color_perms: Vec<Permutation> = Permutation::all(m).collect();
    // table[t][code]: row code after column permutation and renaming t.
    let mut table: Vec<Vec<u32>> = Vec::with_capacity(col_perms.len() * color_perms.len());
    for cp in &col_perms {
        for rp in &color_perms {
            table.push(
                (0..rows)
                    .map(|code| {
                        let row = decode(code);
                        let moved: Vec<usize> = (0..n).map(|j| rp.get(row[cp.get(j)])).collect();
                        encode(&moved) as u32
                    })
                    .collect(),
            );
        }
    }
    let mut codes = vec![0u32; n];
    let mut emitted = 0u64;
    let mut scratch = vec![0u32; n];
    let mut transposed = vec![0u32; n];
    loop {
        if is_canonical(&codes, &table, n, m, &mut scratch, &mut transposed) {
            let rows_v: Vec<Vec<usize>> = codes.iter().map(|&c| decode(c as usize)).collect();
            visit(ColorMatrix::new(m, &rows_v, true)?);
            emitted += 1;
        }
        // Next nondecreasing sequence.
        let Some(pos) = (0..n).rev().find(|&p| (codes[p] as usize) < rows - 1) else { break };
        let v = codes[pos] + 1;
        for c in &mut codes[pos..] {
            *c = v;
        }
    }
    Ok(emitted)
}

fn is_canonical(codes: &[u32], table: &[Vec<u32>], n: usize, m: usize, scratch: &mut [u32], transposed: &mut [u32]) -> bool {
    // Columns of the matrix, as row codes of the transpose.
    let digit = |code: u32, j: usize| (code / (m as u32).pow((n - 1 - j) as u32)) % m as u32;
    for j in 0..n {
        transposed[j] = (0..n).fold(0u32, |acc, i| acc * m as u32 + digit(codes[i], j));
    }
    for source in [codes, &*transposed] {
        for t in table {
            for (s, &c) in scratch.iter_mut().zip(source) {
                *s = t[c as usize];
            }
            scratch.sort_unstable();
            if *scratch < *codes {
                return false;
            }
        }
    }
    true
}

/// Calls `visit` with every labelling of `0..n` by classes `0..m` in which
/// class `c` first appears before class `c + 1` and all `m` classes occur
/// (restricted growth strings), i.e. one labelling per partition.
pub fn for_each_labelling(n: usize, m: usize, budget: u128, mut visit: impl FnMut(&[usize])) -> Result<u64, LabError> {
    let estimate = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX) / factorial(m);
    if estimate > budget {
        return Err(LabError::BudgetExceeded { estimate, budget });
    }
    let mut labels = vec![0usize; n];
    let mut count = 0u64;
    fn rec(i: usize, used: usize, n: usize, m: usize, labels: &mut Vec<usize>, count: &mut u64, visit: &mut dyn FnMut(&[usize])) {
        if m - used > n - i {
            return;
        }
        if i == n {
            if used == m {
                *count += 1;
                visit(labels);
            }
            return;
        }
        for c in 0..=used.min(m - 1) {
            labels[i] = c;
            rec(i + 1, used.max(c + 1), n, m, labels, count, visit);
        }
    }
    if n == 0 {
        return Ok(0);
    }
    rec(0, 0, n, m, &mut labels, &mut count, &mut visit);
    Ok(count)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}
