use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

/// A graded map `⊕ R(-col_twists[j]) → ⊕ R(-row_twists[i])`.
///
/// Every nonzero entry `(i, j)` is homogeneous of degree
/// `col_twists[j] - row_twists[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Ring,
        entries: Vec<Vec<Polynomial>>,
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
    ) -> Result<PolyMatrix> {
        let rows = row_twists.len();
        let cols = col_twists.len();
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Precondition(format!(
                "matrix entries do not match a {rows}x{cols} shape"
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                if !PolyRing::same(f.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                let want = col_twists[j] - row_twists[i];
                if !f.is_zero() && f.homogeneous_degree() != Some(want) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i}, {j}) = {f} should have degree {want}"
                    )));
                }
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
            row_twists,
            col_twists,
        })
    }

    /// Build from columns, reading each column twist off its first nonzero
    /// entry.
    pub fn from_columns(ring: &Ring, row_twists: Vec<i64>, columns: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let rows = row_twists.len();
        let mut col_twists = Vec::with_capacity(columns.len());
        for c in &columns {
            let t = c
                .iter()
                .enumerate()
                .find(|(_, f)| !f.is_zero())
                .map(|(i, f)| {
                    f.homogeneous_degree()
                        .map(|d| d + row_twists[i])
                        .ok_or_else(|| Error::NotHomogeneous(f.to_string()))
                })
                .transpose()?
                .unwrap_or(0);
            col_twists.push(t);
        }
        let entries = (0..rows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        PolyMatrix::new(ring, entries, row_twists, col_twists)
    }

    /// The `1 x n` matrix of generators of a homogeneous ideal.
    pub fn from_ideal(i: &Ideal) -> Result<PolyMatrix> {
        i.require_homogeneous("matrix of generators")?;
        PolyMatrix::from_columns(i.ring(), vec![0], i.gens().iter().map(|g| vec![g.clone()]).collect())
    }

    pub fn zeros(ring: &Ring, row_twists: Vec<i64>, col_twists: Vec<i64>) -> PolyMatrix {
        let (rows, cols) = (row_twists.len(), col_twists.len());
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
            row_twists,
            col_twists,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, f: Polynomial) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `self * other`.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::NotComposable(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.row_twists.clone(), other.col_twists.clone());
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_unchecked(&a.mul_unchecked(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// The submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
            row_twists: rows.iter().map(|&i| self.row_twists[i]).collect(),
            col_twists: cols.iter().map(|&j| self.col_twists[j]).collect(),
        }
    }

    pub(crate) fn dense(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "|")?;
            for (j, c) in row.iter().enumerate() {
                write!(f, " {c:>w$}", w = widths[j])?;
            }
            write!(f, " |")?;
        }
        Ok(())
    }
}
