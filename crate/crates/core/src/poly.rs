//! Canonical sparse multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::Monomial;
use crate::ring::{PolyRing, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial whose terms are nonzero and strictly descending in the ring
/// order. Equal polynomials are structurally equal.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i, 1))
    }

    pub fn monomial(ring: &Ring, c: Scalar, mono: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono }]
        };
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Build from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.coeff) {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.coeff) {
                out.pop();
            }
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    /// Trusted constructor: terms already canonical.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximal total degree, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// `Some(d)` when every term has total degree `d`; the zero polynomial
    /// reports the sentinel `-1`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let Some(first) = self.terms.first() else {
            return Some(-1);
        };
        let d = first.mono.degree();
        self.terms
            .iter()
            .all(|t| t.mono.degree() == d)
            .then_some(d as i64)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponents()[i] > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let one = self.field().one();
        self.combine(&one, &Monomial::one(self.ring.nvars()), other)
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        let m1 = self.field().neg(&self.field().one());
        self.combine(&m1, &Monomial::one(self.ring.nvars()), other)
    }

    /// `self + c * m * g`, by a single merge pass.
    pub(crate) fn combine(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Term| Term {
            coeff: field.mul(c, &t.coeff),
            mono: m.mul_unchecked(&t.mono),
        };
        let mut pending: Option<Term> = g.terms.first().map(shifted);
        while i < self.terms.len() || pending.is_some() {
            match (&self.terms.get(i), &pending) {
                (Some(a), Some(b)) => match order.cmp(&a.mono, &b.mono) {
                    Ordering::Greater => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = g.terms.get(j).map(shifted);
                    }
                    Ordering::Equal => {
                        let s = field.add(&a.coeff, &b.coeff);
                        if !field.is_zero(&s) {
                            out.push(Term {
                                coeff: s,
                                mono: a.mono.clone(),
                            });
                        }
                        i += 1;
                        j += 1;
                        pending = g.terms.get(j).map(shifted);
                    }
                },
                (Some(a), None) => {
                    out.push((*a).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = g.terms.get(j).map(shifted);
                }
                (None, None) => break,
            }
        }
        Polynomial::from_sorted(&self.ring, out)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.mono);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    coeff: field.mul(&a.coeff, &b.coeff),
                    mono: a.mono.mul_unchecked(&b.mono),
                });
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `c * m * self`; order is preserved by monomial multiplication.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(c, &t.coeff),
                mono: m.mul_unchecked(&t.mono),
            })
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.field().neg(&self.field().one()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if self.field().is_one(c) => self.clone(),
            Some(c) => self.scale(&self.field().inv(c).expect("nonzero")),
        }
    }

    /// Over the rationals, the multiple by the lcm of the coefficient
    /// denominators, so every coefficient is an integer. Unchanged mod p.
    pub fn clear_denominators(&self) -> Polynomial {
        let mut lcm = BigInt::one();
        for t in &self.terms {
            if let Scalar::Rat(q) = &t.coeff {
                lcm = lcm.lcm(q.denom());
            }
        }
        if lcm.is_one() {
            return self.clone();
        }
        self.scale(&self.field().from_bigint(&lcm))
    }

    /// Exact quotient `self / g`; errors if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let Some(lt) = g.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let field = self.field();
        let inv = field.inv(&lt.coeff)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = lt.mono.quotient_of(&t.mono).ok_or(Error::InexactDivision)?;
            let c = field.mul(&t.coeff, &inv);
            rem = rem.combine(&field.neg(&c), &m, g);
            quot.push(Term { coeff: c, mono: m });
        }
        Ok(Polynomial::from_sorted(&self.ring, quot))
    }

    /// Map into `ring` (with `k` extra leading variables).
    pub(crate) fn shift_into(&self, ring: &Ring, k: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.shift_front(k),
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Drop `k` leading variables, which must not occur.
    pub(crate) fn drop_into(&self, ring: &Ring, k: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.drop_front(k),
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// The same polynomial in a ring with the same variables and field but
    /// possibly another order.
    pub fn reorder_into(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Substitute `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let ring = images
            .first()
            .map(|p| Arc::clone(&p.ring))
            .unwrap_or_else(|| Arc::clone(&self.ring));
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch(images.len(), self.ring.nvars()));
        }
        let mut acc = Polynomial::zero(&ring);
        for t in &self.terms {
            let mut term = Polynomial::constant(&ring, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&images[i].pow(e as u32))?;
                }
            }
            acc = acc.add_unchecked(&term);
        }
        Ok(acc)
    }

    /// Coefficient of monomial `m`, zero if absent.
    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        let order = self.ring.order();
        match self
            .terms
            .binary_search_by(|t| order.cmp(m, &t.mono))
        {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => self.field().zero(),
        }
    }

    fn fmt_monomial(&self, m: &Monomial, out: &mut String) {
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&self.ring.names()[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = field.is_negative(&t.coeff);
            let abs = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_one = field.is_one(&abs);
            if t.mono.is_one() {
                out.push_str(&field.format(&abs));
            } else {
                if !is_one {
                    out.push_str(&field.format(&abs));
                    out.push('*');
                }
                self.fmt_monomial(&t.mono, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::RingExt;
    use num_rational::BigRational;

    fn ring() -> Ring {
        PolyRing::grevlex(FieldSpec::default_prime(), "x y a b").unwrap()
    }

    #[test]
    fn denominators_clear_to_integers() {
        let r = PolyRing::grevlex(FieldSpec::Rationals, "x y").unwrap();
        let f = r.parse("x - y").unwrap();
        let half = f.scale(&Scalar::Rat(Box::new(BigRational::new(1.into(), 6.into()))));
        assert_eq!(half.clear_denominators(), f);
        let g = r.parse("x^2 - y").unwrap();
        let q = |n: i64, d: i64| Scalar::Rat(Box::new(BigRational::new(n.into(), d.into())));
        let mixed = &g.scale(&q(1, 4)) + &r.parse("x*y").unwrap().scale(&q(2, 3));
        assert_eq!(mixed.clear_denominators(), r.parse("3*x^2 + 8*x*y - 3*y").unwrap());
        assert_eq!(ring().parse("x").unwrap().clear_denominators(), ring().parse("x").unwrap());
    }

    #[test]
    fn identity_inverse_and_squares() {
        let r = ring();
        let f = r.parse("a*x + b*y").unwrap();
        assert_eq!(&f * &r.constant(1), f);
        assert!((&f - &f).is_zero());
        let p = &r.parse("x + y").unwrap() * &r.parse("x - y").unwrap();
        assert_eq!(p, r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        assert_eq!(r.parse("a*x + b*y").unwrap().homogeneous_degree(), Some(2));
        assert_eq!(r.parse("x^2 + y").unwrap().homogeneous_degree(), None);
        assert_eq!(Polynomial::zero(&r).homogeneous_degree(), Some(-1));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = r.parse("x^3 - y^3").unwrap();
        let g = r.parse("x - y").unwrap();
        assert_eq!(f.div_exact(&g).unwrap(), r.parse("x^2 + x*y + y^2").unwrap());
        assert_eq!(r.parse("x^2 + y").unwrap().div_exact(&g), Err(Error::InexactDivision));
    }

    #[test]
    fn ring_mismatch() {
        let r1 = ring();
        let r2 = PolyRing::grevlex(FieldSpec::Rationals, "x y a b").unwrap();
        assert_eq!(r1.var(0).try_add(&r2.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn display_is_signed() {
        let r = ring();
        let f = r.parse("-x^2*y + 3*a - 1").unwrap();
        assert_eq!(f.to_string(), "-x^2*y + 3*a - 1");
    }
}
