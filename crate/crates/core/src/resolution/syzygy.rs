use crate::error::Result;
use crate::groebner::{Engine, ModuleOrder, VTerm, Vector};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

use super::matrix::PolyMatrix;

fn to_vector(col: &[Polynomial], offset: usize, order: &ModuleOrder) -> Vector {
    let mut v: Vector = col
        .iter()
        .enumerate()
        .flat_map(|(i, f)| {
            f.terms().iter().map(move |t| VTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
                comp: offset + i,
            })
        })
        .collect();
    order.sort(&mut v);
    v
}

fn from_vector(ring: &Ring, v: &[VTerm], offset: usize, len: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<Term>> = vec![Vec::new(); len];
    for t in v {
        parts[t.comp - offset].push(Term {
            coeff: t.coeff.clone(),
            mono: t.mono.clone(),
        });
    }
    parts.into_iter().map(|p| Polynomial::from_terms(ring, p)).collect()
}

/// Gröbner basis of the columns `(M e_j, e_j)` under an order eliminating
/// the first `rows` components. Elements living in the trailing components
/// generate `ker M`; normal forms of `(t, 0)` lift targets `t` through `M`.
pub(crate) struct Augmented {
    ring: Ring,
    order: ModuleOrder,
    gb: Vec<Vector>,
    rows: usize,
    cols: usize,
}

impl Augmented {
    pub fn new(m: &PolyMatrix) -> Augmented {
        let ring = m.ring().clone();
        let mut twists = m.row_twists().to_vec();
        twists.extend_from_slice(m.col_twists());
        let order = ModuleOrder {
            mono: ring.order().clone(),
            twists,
            block: m.rows(),
        };
        let one = ring.field().one();
        let gens: Vec<Vector> = (0..m.cols())
            .map(|j| {
                let mut v = to_vector(&m.column(j), 0, &order);
                v.push(VTerm {
                    coeff: one.clone(),
                    mono: Monomial::one(ring.nvars()),
                    comp: m.rows() + j,
                });
                order.sort(&mut v);
                v
            })
            .collect();
        let gb = Engine::new(*ring.field(), &order).groebner(gens);
        Augmented {
            ring,
            order,
            gb,
            rows: m.rows(),
            cols: m.cols(),
        }
    }

    /// Generators of the kernel with their twists.
    pub fn kernel(&self) -> Vec<(Vec<Polynomial>, i64)> {
        self.gb
            .iter()
            .filter(|v| v[0].comp >= self.rows)
            .map(|v| {
                let t = self.order.degree(&v[0].mono, v[0].comp);
                (from_vector(&self.ring, v, self.rows, self.cols), t)
            })
            .collect()
    }

    /// Coefficients `w` with `M w = target`, if the target is in the image.
    pub fn lift(&self, target: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let v = to_vector(target, 0, &self.order);
        let nf = Engine::new(*self.ring.field(), &self.order).normal_form(v, &self.gb);
        if nf.iter().any(|t| t.comp < self.rows) {
            return None;
        }
        let w = from_vector(&self.ring, &nf, self.rows, self.cols);
        Some(w.iter().map(Polynomial::neg).collect())
    }
}

/// A minimal generating subset of the graded submodule of
/// `⊕ R(-twists[i])` spanned by `cols`, scanning in ascending degree.
pub(crate) fn minimal_columns(
    ring: &Ring,
    twists: &[i64],
    mut cols: Vec<(Vec<Polynomial>, i64)>,
) -> Vec<(Vec<Polynomial>, i64)> {
    let order = ModuleOrder {
        mono: ring.order().clone(),
        twists: twists.to_vec(),
        block: 0,
    };
    let engine = Engine::new(*ring.field(), &order);
    cols.retain(|(c, _)| c.iter().any(|f| !f.is_zero()));
    cols.sort_by_key(|(_, t)| *t);
    let mut kept: Vec<(Vec<Polynomial>, i64)> = Vec::new();
    let mut i = 0;
    while i < cols.len() {
        let d = cols[i].1;
        let mut j = i;
        while j < cols.len() && cols[j].1 == d {
            j += 1;
        }
        let lower = engine.groebner(kept.iter().map(|(c, _)| to_vector(c, 0, &order)).collect());
        let mut echelon: Vec<Vector> = Vec::new();
        for cand in &cols[i..j] {
            let mut v = engine.normal_form(to_vector(&cand.0, 0, &order), &lower);
            while let Some(row) = v.first().and_then(|lead| {
                echelon
                    .iter()
                    .find(|r| r[0].comp == lead.comp && r[0].mono == lead.mono)
            }) {
                let c = v[0].coeff.clone();
                v = engine.sub_scaled(&v, &c, row);
            }
            if !v.is_empty() {
                echelon.push(engine.make_monic(v));
                kept.push(cand.clone());
            }
        }
        i = j;
    }
    kept
}

/// Minimal generators of `ker M`, as the columns of a matrix whose row
/// twists are the column twists of `M`.
pub fn syzygies(m: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = m.ring();
    if m.cols() == 0 {
        return Ok(PolyMatrix::zeros(ring, Vec::new(), Vec::new()));
    }
    let kernel = Augmented::new(m).kernel();
    let kept = minimal_columns(ring, m.col_twists(), kernel);
    let twists: Vec<i64> = kept.iter().map(|(_, t)| *t).collect();
    let rows = m.cols();
    let entries = (0..rows)
        .map(|i| kept.iter().map(|(c, _)| c[i].clone()).collect())
        .collect();
    PolyMatrix::new(ring, entries, m.col_twists().to_vec(), twists)
}
