//! Buchberger's algorithm over free modules.
//!
//! The engine works on vectors whose terms carry a component index. Ideals
//! are the rank one case with the ring order; syzygies and cofactor lifts use
//! higher ranks with a twisted, position-aware module order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::{PolyRing, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VTerm {
    pub coeff: Scalar,
    pub mono: Monomial,
    pub comp: usize,
}

/// Terms sorted strictly descending under a [`ModuleOrder`].
pub type Vector = Vec<VTerm>;

/// Order on monomials times basis vectors.
///
/// Components below `block` dominate all others. Then the twisted degree
/// `deg m + twists[comp]` (when twists are given), then the ring order, and
/// finally lower component indices rank higher.
#[derive(Debug, Clone)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub twists: Vec<i64>,
    pub block: usize,
}

impl ModuleOrder {
    pub fn ring(mono: MonomialOrder) -> Self {
        ModuleOrder {
            mono,
            twists: Vec::new(),
            block: 0,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ac: usize, b: &Monomial, bc: usize) -> Ordering {
        if self.block > 0 {
            let (ab, bb) = (ac < self.block, bc < self.block);
            if ab != bb {
                return ab.cmp(&bb);
            }
        }
        if !self.twists.is_empty() {
            let da = a.degree() as i64 + self.twists[ac];
            let db = b.degree() as i64 + self.twists[bc];
            if da != db {
                return da.cmp(&db);
            }
        }
        self.mono.cmp(a, b).then_with(|| bc.cmp(&ac))
    }

    pub(crate) fn degree(&self, m: &Monomial, comp: usize) -> i64 {
        m.degree() as i64 + self.twists.get(comp).copied().unwrap_or(0)
    }

    pub fn sort(&self, terms: &mut Vector) {
        terms.sort_by(|a, b| self.cmp(&b.mono, b.comp, &a.mono, a.comp));
    }
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

struct Elem {
    v: Vector,
    mask: u64,
    active: bool,
}

impl Elem {
    fn new(v: Vector) -> Self {
        Elem {
            mask: divmask(&v[0].mono),
            v,
            active: true,
        }
    }

    fn lead(&self) -> &VTerm {
        &self.v[0]
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    degree: i64,
}

/// Field arithmetic and ordering for one computation.
pub(crate) struct Engine<'a> {
    pub field: FieldSpec,
    pub order: &'a ModuleOrder,
}

impl<'a> Engine<'a> {
    pub fn new(field: FieldSpec, order: &'a ModuleOrder) -> Self {
        Engine { field, order }
    }

    /// `p - c*m*g`, all terms of `p` and `g` already sorted.
    fn sub_mul(&self, p: &[VTerm], c: &Scalar, m: &Monomial, g: &[VTerm]) -> Vector {
        let f = &self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|t| VTerm {
            coeff: f.neg(&f.mul(c, &t.coeff)),
            mono: t.mono.mul_unchecked(m),
            comp: t.comp,
        });
        let mut next = gi.next();
        while let Some(q) = next.take() {
            if i >= p.len() {
                out.push(q);
                next = gi.next();
                continue;
            }
            match self.order.cmp(&p[i].mono, p[i].comp, &q.mono, q.comp) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                    next = Some(q);
                }
                Ordering::Less => {
                    out.push(q);
                    next = gi.next();
                }
                Ordering::Equal => {
                    let s = f.add(&p[i].coeff, &q.coeff);
                    if !f.is_zero(&s) {
                        out.push(VTerm {
                            coeff: s,
                            mono: q.mono,
                            comp: q.comp,
                        });
                    }
                    i += 1;
                    next = gi.next();
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        out
    }

    fn find_reducer<'e>(&self, t: &VTerm, elems: &'e [Elem], skip: Option<usize>) -> Option<&'e Elem> {
        let mask = divmask(&t.mono);
        elems.iter().enumerate().find_map(|(k, e)| {
            if !e.active || Some(k) == skip || e.mask & !mask != 0 {
                return None;
            }
            let l = e.lead();
            (l.comp == t.comp && l.mono.divides(&t.mono)).then_some(e)
        })
    }

    /// Full reduction of `p` by the active elements.
    fn reduce(&self, p: Vector, elems: &[Elem], skip: Option<usize>) -> Vector {
        let f = &self.field;
        let mut rem = Vec::new();
        let mut p = p;
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            match self.find_reducer(t, elems, skip) {
                Some(e) => {
                    let l = e.lead();
                    let c = f.div(&t.coeff, &l.coeff).expect("nonzero leading coefficient");
                    let m = l.mono.quotient_of(&t.mono).expect("divisible");
                    p = self.sub_mul(&p[start..], &c, &m, &e.v);
                    start = 0;
                }
                None => {
                    rem.push(t.clone());
                    start += 1;
                }
            }
        }
        rem
    }

    /// `p - c*g`.
    pub(crate) fn sub_scaled(&self, p: &[VTerm], c: &Scalar, g: &[VTerm]) -> Vector {
        match g.first() {
            Some(t) => self.sub_mul(p, c, &Monomial::one(t.mono.nvars()), g),
            None => p.to_vec(),
        }
    }

    pub(crate) fn make_monic(&self, mut v: Vector) -> Vector {
        let f = &self.field;
        if let Some(lead) = v.first() {
            if !f.is_one(&lead.coeff) {
                let inv = f.inv(&lead.coeff).expect("nonzero");
                for t in v.iter_mut() {
                    t.coeff = f.mul(&t.coeff, &inv);
                }
            }
        }
        v
    }

    fn spoly(&self, a: &Vector, b: &Vector, lcm: &Monomial) -> Vector {
        let f = &self.field;
        let ma = a[0].mono.quotient_of(lcm).expect("lcm");
        let mb = b[0].mono.quotient_of(lcm).expect("lcm");
        let ia = f.inv(&a[0].coeff).expect("nonzero");
        let ib = f.inv(&b[0].coeff).expect("nonzero");
        let sa: Vector = a[1..]
            .iter()
            .map(|t| VTerm {
                coeff: f.mul(&t.coeff, &ia),
                mono: t.mono.mul_unchecked(&ma),
                comp: t.comp,
            })
            .collect();
        self.sub_mul(&sa, &ib, &mb, &b[1..])
    }

    fn make_pair(&self, elems: &[Elem], i: usize, j: usize) -> Option<Pair> {
        let (a, b) = (elems[i].lead(), elems[j].lead());
        if a.comp != b.comp {
            return None;
        }
        let lcm = a.mono.lcm(&b.mono);
        Some(Pair {
            degree: self.order.degree(&lcm, a.comp),
            comp: a.comp,
            lcm,
            i,
            j,
        })
    }

    /// Gebauer–Möller update after appending element `h`.
    fn update(&self, elems: &mut [Elem], pairs: &mut Vec<Pair>, h: usize, product_criterion: bool) {
        let hl = elems[h].lead().clone();
        let cands: Vec<Pair> = (0..h)
            .filter(|&g| elems[g].active)
            .filter_map(|g| self.make_pair(elems, g, h))
            .collect();
        let coprime = |p: &Pair, elems: &[Elem]| {
            product_criterion && elems[p.i].lead().mono.gcd_is_one(&hl.mono)
        };
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            if coprime(p, elems)
                || !cands[k + 1..]
                    .iter()
                    .chain(kept.iter())
                    .any(|q| q.lcm.divides(&p.lcm))
            {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| !coprime(p, elems));
        // Old pairs whose lcm is strictly covered through h.
        pairs.retain(|p| {
            if p.comp != hl.comp || !hl.mono.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().mono.lcm(&hl.mono);
            let lj = elems[p.j].lead().mono.lcm(&hl.mono);
            li == p.lcm || lj == p.lcm
        });
        pairs.extend(kept);
        for g in 0..h {
            if elems[g].active {
                let gl = elems[g].lead();
                if gl.comp == hl.comp && hl.mono.divides(&gl.mono) {
                    elems[g].active = false;
                }
            }
        }
    }

    fn pick(&self, pairs: &mut Vec<Pair>) -> Option<Pair> {
        let best = (0..pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&pairs[a], &pairs[b]);
            p.degree
                .cmp(&q.degree)
                .then_with(|| self.order.cmp(&p.lcm, p.comp, &q.lcm, q.comp))
                .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
        })?;
        Some(pairs.swap_remove(best))
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let product_criterion = gens.iter().flatten().all(|t| t.comp == 0);
        let mut elems: Vec<Elem> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut input: Vec<Vector> = gens.into_iter().filter(|v| !v.is_empty()).collect();
        // Low degrees first so early elements reduce later ones.
        input.sort_by(|a, b| {
            self.order
                .degree(&a[0].mono, a[0].comp)
                .cmp(&self.order.degree(&b[0].mono, b[0].comp))
                .then_with(|| self.order.cmp(&a[0].mono, a[0].comp, &b[0].mono, b[0].comp))
        });
        for v in input {
            let r = self.reduce(v, &elems, None);
            if r.is_empty() {
                continue;
            }
            let h = elems.len();
            elems.push(Elem::new(self.make_monic(r)));
            self.update(&mut elems, &mut pairs, h, product_criterion);
        }
        while let Some(p) = self.pick(&mut pairs) {
            let s = self.spoly(&elems[p.i].v, &elems[p.j].v, &p.lcm);
            let r = self.reduce(s, &elems, None);
            if r.is_empty() {
                continue;
            }
            let h = elems.len();
            elems.push(Elem::new(self.make_monic(r)));
            self.update(&mut elems, &mut pairs, h, product_criterion);
        }
        self.interreduce(elems)
    }

    fn interreduce(&self, elems: Vec<Elem>) -> Vec<Vector> {
        let mut min: Vec<Elem> = Vec::new();
        for e in elems.into_iter().filter(|e| e.active) {
            let l = e.lead();
            if min
                .iter()
                .any(|m| m.lead().comp == l.comp && m.lead().mono.divides(&l.mono))
            {
                continue;
            }
            min.retain(|m| !(m.lead().comp == l.comp && l.mono.divides(&m.lead().mono)));
            min.push(e);
        }
        let mut out: Vec<Vector> = (0..min.len())
            .map(|k| self.make_monic(self.reduce(min[k].v.clone(), &min, Some(k))))
            .collect();
        out.sort_by(|a, b| self.order.cmp(&b[0].mono, b[0].comp, &a[0].mono, a[0].comp));
        out
    }

    /// Normal form of `v` modulo a Gröbner basis.
    pub fn normal_form(&self, v: Vector, basis: &[Vector]) -> Vector {
        let elems: Vec<Elem> = basis.iter().map(|b| Elem::new(b.clone())).collect();
        self.reduce(v, &elems, None)
    }
}

fn to_vector(f: &Polynomial) -> Vector {
    f.terms()
        .iter()
        .map(|t| VTerm {
            coeff: t.coeff.clone(),
            mono: t.mono.clone(),
            comp: 0,
        })
        .collect()
}

fn from_vector(ring: &Ring, v: Vector) -> Polynomial {
    Polynomial::from_sorted(
        ring,
        v.into_iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono,
            })
            .collect(),
    )
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by leading monomial
/// descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if !PolyRing::same(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let order = ModuleOrder::ring(ring.order().clone());
    let engine = Engine::new(*ring.field(), &order);
    let basis = engine.groebner(gens.iter().map(to_vector).collect());
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: basis.into_iter().map(|v| from_vector(ring, v)).collect(),
    })
}

/// Remainder of `f` on division by `basis`; zero exactly when `f` is in the
/// ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if !PolyRing::same(f.ring(), &basis.ring) {
        return Err(Error::RingMismatch);
    }
    let order = ModuleOrder::ring(basis.ring.order().clone());
    let engine = Engine::new(*basis.ring.field(), &order);
    let vs: Vec<Vector> = basis.elements.iter().map(to_vector).collect();
    Ok(from_vector(&basis.ring, engine.normal_form(to_vector(f), &vs)))
}
