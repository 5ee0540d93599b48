use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::codim;
use crate::poly::Polynomial;

use super::matrix::PolyMatrix;
use super::FreeResolution;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for l in i + 1..k {
                    cur[l] = cur[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "square matrix");
    if n == 0 {
        panic!("determinant of an empty matrix needs a ring");
    }
    let ring = a[0][0].ring().clone();
    let mut prev = Polynomial::one(&ring);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Polynomial::zero(&ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k]
                    .mul_unchecked(&a[i][j])
                    .sub_unchecked(&a[i][k].mul_unchecked(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// The ideal of `r x r` minors.
pub fn minors(m: &PolyMatrix, r: usize) -> Result<Ideal> {
    if r == 0 || r > m.rows().min(m.cols()) {
        return Err(Error::MinorSize {
            r,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let dense = m.dense();
    let col_sets = subsets(m.cols(), r);
    let dets: Vec<Polynomial> = subsets(m.rows(), r)
        .par_iter()
        .flat_map_iter(|rows| {
            let dense = &dense;
            col_sets.iter().map(move |cols| {
                let sub: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| dense[i][j].clone()).collect())
                    .collect();
                determinant(sub)
            })
        })
        .filter(|d| !d.is_zero())
        .map(|d| d.monic())
        .collect();
    Ideal::new(m.ring(), dets)
}

/// Rank over the fraction field, by fraction-free row echelon form.
pub fn rank(m: &PolyMatrix) -> usize {
    let mut a = m.dense();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = Polynomial::one(m.ring());
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&p| !a[p][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let v = a[row][col]
                    .mul_unchecked(&a[i][j])
                    .sub_unchecked(&a[i][col].mul_unchecked(&a[row][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][col] = Polynomial::zero(m.ring());
        }
        prev = a[row][col].clone();
        row += 1;
    }
    row
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BeStep {
    /// Homological position `i` of the map `F_i -> F_{i-1}`.
    pub index: usize,
    pub rank: usize,
    /// `rank F_i - rank φ_{i+1}`.
    pub expected_rank: usize,
    /// Codimension of the ideal of `rank`-sized minors; `None` stands for the
    /// unit ideal of empty minors.
    pub minors_codim: Option<i64>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BeReport {
    pub steps: Vec<BeStep>,
    pub composites_zero: bool,
    pub acyclic: bool,
}

/// The Buchsbaum–Eisenbud test: `rank φ_i + rank φ_{i+1} = rank F_i` and
/// `codim I_{r_i}(φ_i) >= i` for every `i`, plus `φ_i φ_{i+1} = 0`.
pub fn check_buchsbaum_eisenbud(res: &FreeResolution) -> Result<BeReport> {
    let maps = res.maps();
    for w in maps.windows(2) {
        if w[0].cols() != w[1].rows() {
            return Err(Error::NotComposable(format!(
                "{}x{} followed by {}x{}",
                w[0].rows(),
                w[0].cols(),
                w[1].rows(),
                w[1].cols()
            )));
        }
    }
    let composites_zero = res.composites_zero()?;
    let ranks: Vec<usize> = maps.iter().map(rank).collect();
    let steps: Vec<BeStep> = (0..maps.len())
        .into_par_iter()
        .map(|k| {
            let r = ranks[k];
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            let expected = maps[k].cols() - next.min(maps[k].cols());
            let minors_codim = if r == 0 {
                None
            } else {
                Some(codim(&minors(&maps[k], r)?))
            };
            let ok = r + next == maps[k].cols() && minors_codim.is_none_or(|c| c >= (k + 1) as i64);
            Ok(BeStep {
                index: k + 1,
                rank: r,
                expected_rank: expected,
                minors_codim,
                ok,
            })
        })
        .collect::<Result<_>>()?;
    let acyclic = composites_zero && steps.iter().all(|s| s.ok);
    Ok(BeReport {
        steps,
        composites_zero,
        acyclic,
    })
}
