//! Graded free resolutions, Betti tables, minors and acyclicity.

mod matrix;
mod minors;
mod present;
mod syzygy;

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub use matrix::PolyMatrix;
pub use minors::{check_buchsbaum_eisenbud, determinant, minors, rank, BeReport, BeStep};
pub use present::{pd_module, subquotient_presentation};
pub use syzygy::syzygies;

/// A complex `F_0 <- F_1 <- ... <- F_n` given by its maps, where
/// `maps[k]` is `F_{k+1} -> F_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    ring: Ring,
    base_twists: Vec<i64>,
    maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    /// A complex from explicit maps; checks that consecutive maps compose.
    pub fn new(ring: &Ring, base_twists: Vec<i64>, maps: Vec<PolyMatrix>) -> Result<FreeResolution> {
        let mut prev = base_twists.as_slice();
        for (k, m) in maps.iter().enumerate() {
            if m.row_twists() != prev {
                return Err(Error::NotComposable(format!(
                    "map {} has {} rows with twists {:?}, expected twists {:?}",
                    k + 1,
                    m.rows(),
                    m.row_twists(),
                    prev
                )));
            }
            prev = m.col_twists();
        }
        Ok(FreeResolution {
            ring: ring.clone(),
            base_twists,
            maps,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn base_twists(&self) -> &[i64] {
        &self.base_twists
    }

    /// Number of maps; the projective dimension once minimized.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Ranks of `F_0, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        std::iter::once(self.base_twists.len())
            .chain(self.maps.iter().map(PolyMatrix::cols))
            .collect()
    }

    pub fn composites_zero(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FreeResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks = self.ranks();
        let parts: Vec<String> = ranks.iter().map(|r| format!("R^{r}")).collect();
        write!(f, "{}", parts.join(" <-- "))
    }
}

fn resolve_from(ring: &Ring, base_twists: Vec<i64>, first: PolyMatrix) -> Result<FreeResolution> {
    let cap = ring.nvars() + 1;
    let mut maps = vec![first];
    loop {
        let k = syzygies(maps.last().expect("nonempty"))?;
        if k.cols() == 0 {
            break;
        }
        if maps.len() >= cap {
            return Err(Error::ResolutionTooLong(ring.nvars()));
        }
        maps.push(k);
    }
    Ok(minimize(&FreeResolution::new(ring, base_twists, maps)?))
}

/// Minimal graded free resolution of `R/I`.
///
/// Each kernel is cut down to minimal generators as it is computed, then a
/// final [`minimize`] pass removes any remaining unit entries.
pub fn resolve(i: &Ideal) -> Result<FreeResolution> {
    i.require_homogeneous("resolve")?;
    let ring = i.ring();
    if i.is_zero() {
        return FreeResolution::new(ring, vec![0], Vec::new());
    }
    let gens = i.minimalize()?;
    resolve_from(ring, vec![0], PolyMatrix::from_ideal(&gens)?)
}

/// Resolution of the cokernel of a graded presentation matrix.
pub fn resolve_cokernel(p: &PolyMatrix) -> Result<FreeResolution> {
    if p.cols() == 0 {
        return FreeResolution::new(p.ring(), p.row_twists().to_vec(), Vec::new());
    }
    resolve_from(p.ring(), p.row_twists().to_vec(), p.clone())
}

fn is_unit(f: &Polynomial) -> bool {
    !f.is_zero() && f.is_constant()
}

struct Dense {
    rows: Vec<i64>,
    cols: Vec<i64>,
    a: Vec<Vec<Polynomial>>,
}

impl Dense {
    fn drop_row(&mut self, i: usize) {
        self.rows.remove(i);
        self.a.remove(i);
    }

    fn drop_col(&mut self, j: usize) {
        self.cols.remove(j);
        for r in self.a.iter_mut() {
            r.remove(j);
        }
    }
}

/// Remove unit entries by cancelling trivial summands `R -> R`, scanning
/// maps in order and each map row-major.
pub fn minimize(res: &FreeResolution) -> FreeResolution {
    let ring = &res.ring;
    let field = *ring.field();
    let mut base = res.base_twists.clone();
    let mut maps: Vec<Dense> = res
        .maps
        .iter()
        .map(|m| Dense {
            rows: m.row_twists().to_vec(),
            cols: m.col_twists().to_vec(),
            a: m.dense(),
        })
        .collect();
    'scan: loop {
        for k in 0..maps.len() {
            let m = &maps[k];
            let hit = (0..m.rows.len())
                .flat_map(|i| (0..m.cols.len()).map(move |j| (i, j)))
                .find(|&(i, j)| is_unit(&m.a[i][j]));
            let Some((i, j)) = hit else { continue };
            let m = &mut maps[k];
            let u = m.a[i][j].leading_coeff().expect("unit").clone();
            let uinv = field.inv(&u).expect("nonzero");
            let pivot_row = m.a[i].clone();
            for r in 0..m.rows.len() {
                if r == i || m.a[r][j].is_zero() {
                    continue;
                }
                let factor = m.a[r][j].scale(&uinv);
                for l in 0..m.cols.len() {
                    if l != j && !pivot_row[l].is_zero() {
                        m.a[r][l] = m.a[r][l].sub_unchecked(&factor.mul_unchecked(&pivot_row[l]));
                    }
                }
            }
            m.drop_row(i);
            m.drop_col(j);
            if k == 0 {
                base.remove(i);
            } else {
                maps[k - 1].drop_col(i);
            }
            if k + 1 < maps.len() {
                maps[k + 1].drop_row(j);
            }
            continue 'scan;
        }
        break;
    }
    while maps.last().is_some_and(|m| m.cols.is_empty()) {
        maps.pop();
    }
    let maps = maps
        .into_iter()
        .map(|d| PolyMatrix::new(ring, d.a, d.rows, d.cols).expect("cancellation keeps degrees"))
        .collect();
    FreeResolution::new(ring, base, maps).expect("cancellation keeps shapes")
}

/// Graded Betti numbers `β_{i,j}` keyed by homological index and internal
/// degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for ((i, j), r) in &self.entries {
            seq.serialize_element(&[*i as i64, *j, *r as i64])?;
        }
        seq.end()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let top = self.pd();
        let slopes: Vec<i64> = self.entries.keys().map(|(i, j)| j - *i as i64).collect();
        let (lo, hi) = (*slopes.iter().min().expect("nonempty"), *slopes.iter().max().expect("nonempty"));
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(top.to_string().len());
        write!(f, "{:>7}", "")?;
        for i in 0..=top {
            write!(f, " {i:>width$}")?;
        }
        write!(f, "\n{:>7}", "total:")?;
        for i in 0..=top {
            write!(f, " {:>width$}", self.total(i))?;
        }
        for s in lo..=hi {
            write!(f, "\n{:>7}", format!("{s}:"))?;
            for i in 0..=top {
                write!(f, " {:>width$}", cell(self.get(i, s + i as i64)))?;
            }
        }
        Ok(())
    }
}

pub fn betti(res: &FreeResolution) -> BettiTable {
    let mut entries = BTreeMap::new();
    for &t in &res.base_twists {
        *entries.entry((0, t)).or_insert(0) += 1;
    }
    for (k, m) in res.maps.iter().enumerate() {
        for &t in m.col_twists() {
            *entries.entry((k + 1, t)).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

/// `pd(R/I)`, the length of the minimal resolution.
pub fn pd_quotient(i: &Ideal) -> Result<usize> {
    Ok(resolve(i)?.length())
}
