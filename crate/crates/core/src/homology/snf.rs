use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::SparseMatrix;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Nonzero invariant factors of an integer matrix, in divisibility order.
///
/// Unit pivots are eliminated sparsely in machine integers first; whatever
/// survives (or the state at the first overflow) goes through a dense
/// Smith normal form over big integers.
pub fn invariant_factors(m: &SparseMatrix, limits: &Limits) -> Result<Vec<BigInt>> {
    if m.cols.len() > limits.max_snf_columns {
        return Err(Error::ResourceLimit {
            what: "boundary matrix columns",
            needed: m.cols.len() as u128,
            cap: limits.max_snf_columns as u128,
        });
    }
    let mut cols = m.cols.clone();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows];
    for (j, col) in cols.iter().enumerate() {
        for &(i, _) in col {
            row_cols[i].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;
    'outer: loop {
        let mut progress = false;
        for c in 0..cols.len() {
            if !alive[c] {
                continue;
            }
            if cols[c].is_empty() {
                alive[c] = false;
                continue;
            }
            let Some(&(r, v)) = cols[c]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(i, _)| row_cols[*i].len())
            else {
                continue;
            };
            let others: Vec<usize> = row_cols[r].iter().copied().filter(|&j| j != c).collect();
            for j in others {
                let a = cols[j].iter().find(|(i, _)| *i == r).expect("indexed").1;
                let q = a * v;
                let Some(new) = axpy(&cols[j], &cols[c], q) else {
                    break 'outer;
                };
                for &(i, _) in &cols[j] {
                    row_cols[i].remove(&j);
                }
                for &(i, _) in &new {
                    row_cols[i].insert(j);
                }
                cols[j] = new;
            }
            for &(i, _) in &cols[c] {
                row_cols[i].remove(&c);
            }
            alive[c] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let core_cols: Vec<usize> = (0..cols.len()).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let mut core_rows: Vec<usize> = core_cols.iter().flat_map(|&j| cols[j].iter().map(|&(i, _)| i)).collect();
    core_rows.sort_unstable();
    core_rows.dedup();
    if core_cols.len() > limits.max_snf_columns || core_rows.len() > limits.max_snf_columns {
        return Err(Error::ResourceLimit {
            what: "dense Smith normal form core",
            needed: core_cols.len().max(core_rows.len()) as u128,
            cap: limits.max_snf_columns as u128,
        });
    }
    let mut dense = vec![vec![BigInt::zero(); core_cols.len()]; core_rows.len()];
    for (jj, &j) in core_cols.iter().enumerate() {
        for &(i, v) in &cols[j] {
            let ii = core_rows.binary_search(&i).expect("collected");
            dense[ii][jj] = BigInt::from(v);
        }
    }
    let mut factors = vec![BigInt::from(1); units];
    factors.extend(dense_diagonal(dense));
    Ok(divisibility_chain(factors))
}

/// col_j - q * col_c with overflow checking.
fn axpy(a: &[(usize, i64)], b: &[(usize, i64)], q: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
        let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
        if take_a {
            out.push(a[x]);
            x += 1;
        } else if take_b {
            out.push((b[y].0, b[y].1.checked_mul(q)?.checked_neg()?));
            y += 1;
        } else {
            let v = a[x].1.checked_sub(b[y].1.checked_mul(q)?)?;
            if v != 0 {
                out.push((a[x].0, v));
            }
            x += 1;
            y += 1;
        }
    }
    Some(out)
}

/// Diagonalises by row and column operations; returns the absolute values of
/// the nonzero diagonal entries (not yet in divisibility order).
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, t, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    let pivot_row = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(pivot_row.iter()).skip(t) {
                        *x -= &q * p;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut().skip(t) {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                break;
            }
            let cands = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            let (pi, pj) = min_entry(&a, t, cands).expect("pivot is nonzero");
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_entry(a: &[Vec<BigInt>], _t: usize, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        if a[i][j].is_zero() {
            continue;
        }
        if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
            best = Some((i, j));
        }
    }
    best
}

/// Rewrites a list of positive diagonal entries as d_1 | d_2 | ... with the
/// same product structure.
fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
