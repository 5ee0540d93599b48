use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring, RingExt};

/// An ideal given by generators, with its reduced Gröbner basis computed on
/// first use.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped and duplicates removed.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !PolyRing::same(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        Ideal::new(ring, ring.parse_all(gens)?)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    fn from_basis(ring: &Ring, gb: GroebnerBasis) -> Ideal {
        let lock = OnceLock::new();
        let gens = gb.elements().to_vec();
        let _ = lock.set(gb);
        Ideal {
            ring: ring.clone(),
            gens,
            gb: lock,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| buchberger(&self.ring, &self.gens).expect("generators share the ring"))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub(crate) fn require_homogeneous(&self, what: &str) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::NotHomogeneous(format!("{what}: generator {g}"))),
            None => Ok(()),
        }
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb().contains(f)
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb().elements() == other.gb().elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul_unchecked(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Result<Ideal> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.with_elimination_vars(1);
        let t = big.var(0);
        let one_minus_t = &big.constant(1) - &t;
        let mut gens: Vec<Polynomial> = self
            .gb()
            .elements()
            .iter()
            .map(|f| t.mul_unchecked(&f.shift_into(&big, 1)))
            .collect();
        gens.extend(
            other
                .gb()
                .elements()
                .iter()
                .map(|g| one_minus_t.mul_unchecked(&g.shift_into(&big, 1))),
        );
        let gb = buchberger(&big, &gens)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| !g.uses_var(0))
            .map(|g| g.drop_into(&self.ring, 1))
            .collect();
        Ideal::new(&self.ring, kept)?.canonical_minimal()
    }

    /// `I : (f)`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let quotients = meet
            .gens
            .iter()
            .map(|g| g.div_exact(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, quotients)?.canonical_minimal()
    }

    /// `I : J`, intersecting the colons by each generator of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            if self.contains(f)? {
                continue;
            }
            let c = self.colon_poly(f)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : f^∞`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::SaturateByZero);
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon_poly(f)?;
            if next.equals(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// Contraction to the subring on all but the first `k` variables,
    /// returned as an ideal of the same ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if k >= n {
            return Err(Error::EliminationRange { k, nvars: n });
        }
        if k == 0 {
            return Ok(Ideal::from_basis(&self.ring, self.gb().clone()));
        }
        let inner = match self.ring.order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::GrevLex,
        };
        let elim = self.ring.with_order(MonomialOrder::block(k, inner))?;
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.reorder_into(&elim)).collect();
        let gb = buchberger(&elim, &gens)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| (0..k).all(|i| !g.uses_var(i)))
            .map(|g| g.reorder_into(&self.ring))
            .collect();
        let basis = buchberger(&self.ring, &kept)?;
        Ok(Ideal::from_basis(&self.ring, basis))
    }

    /// The same ideal, generated by a minimal subset of its reduced Gröbner
    /// basis (for homogeneous ideals) so that results print canonically.
    pub fn canonical_minimal(&self) -> Result<Ideal> {
        let gb = self.gb().clone();
        let cands = Ideal::new(&self.ring, gb.elements().to_vec())?;
        let mut out = cands.minimalize()?;
        out.gb = OnceLock::new();
        let _ = out.gb.set(gb);
        Ok(out)
    }

    /// Drop generators lying in the ideal of the others, keeping lower
    /// degrees first. For homogeneous ideals the result is a minimal
    /// generating set.
    pub fn minimalize(&self) -> Result<Ideal> {
        if self.is_unit() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.total_degree().unwrap_or(0));
        if !self.is_homogeneous() {
            let mut i = gens.len();
            while i > 0 {
                i -= 1;
                let mut others = gens.clone();
                let g = others.remove(i);
                if Ideal::new(&self.ring, others.clone())?.contains(&g)? {
                    gens = others;
                }
            }
            return Ideal::new(&self.ring, gens);
        }
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut i = 0;
        while i < gens.len() {
            let d = gens[i].total_degree();
            let mut j = i;
            while j < gens.len() && gens[j].total_degree() == d {
                j += 1;
            }
            let lower = buchberger(&self.ring, &kept)?;
            let mut echelon: Vec<Polynomial> = Vec::new();
            for g in &gens[i..j] {
                let mut v = lower.normal_form(g)?;
                while let Some(row) = v
                    .leading_monomial()
                    .and_then(|m| echelon.iter().find(|r| r.leading_monomial() == Some(m)))
                {
                    let c = v.leading_coeff().expect("nonzero").clone();
                    v = v.sub_unchecked(&row.scale(&c));
                }
                if !v.is_zero() {
                    echelon.push(v.monic());
                    kept.push(g.clone());
                }
            }
            i = j;
        }
        Ideal::new(&self.ring, kept)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
