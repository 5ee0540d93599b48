//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 16]>;

/// An exponent vector with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, index: usize, power: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m.degree = power as u32;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch(self.nvars(), other.nvars()));
        }
        let mut exps = Exponents::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// `self * other`, panicking on overflow. Degrees in this engine stay
    /// far below the `u16` range.
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        self.mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for a in &self.exps {
            let v = (*a as u32).checked_mul(e).ok_or(Error::ExponentOverflow)?;
            exps.push(u16::try_from(v).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree * e,
        })
    }

    /// Drop the first `k` variables (which must have exponent zero).
    pub(crate) fn drop_front(&self, k: usize) -> Monomial {
        Monomial::new(&self.exps[k..])
    }

    /// Prepend `k` zero exponents.
    pub(crate) fn shift_front(&self, k: usize) -> Monomial {
        let mut exps = Exponents::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// A global monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Elimination order: the first `k` variables are compared by grevlex
    /// first, the remaining ones by `inner`.
    Block { k: usize, inner: Box<MonomialOrder> },
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn block(k: usize, inner: MonomialOrder) -> Self {
        MonomialOrder::Block {
            k,
            inner: Box::new(inner),
        }
    }

    /// Whether the order refines total degree, so that `cmp` can shortcut on
    /// cached degrees.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    /// The number of variables this order requires at least.
    pub fn min_arity(&self) -> usize {
        match self {
            MonomialOrder::GrevLex | MonomialOrder::Lex => 1,
            MonomialOrder::Block { k, inner } => k + inner.min_arity(),
        }
    }

    pub fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Block { k, inner } => {
                grevlex(&a[..*k], &b[..*k]).then_with(|| inner.cmp_slices(&a[*k..], &b[*k..]))
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if let MonomialOrder::GrevLex = self {
            if a.degree != b.degree {
                return a.degree.cmp(&b.degree);
            }
            for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            return Ordering::Equal;
        }
        self.cmp_slices(&a.exps, &b.exps)
    }

    /// Comparison with an arity check.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
        }
        if a.nvars() < self.min_arity() {
            return Err(Error::ArityMismatch(a.nvars(), self.min_arity()));
        }
        Ok(self.cmp(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { k, inner } => write!(f, "block({k}, {inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_two_vars() {
        let x2 = Monomial::new(&[2, 0]);
        let xy = Monomial::new(&[1, 1]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&x2, &xy), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        let m = Monomial::new(&[1, 3, 2]);
        for ord in [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::block(1, MonomialOrder::GrevLex),
        ] {
            assert_eq!(ord.cmp(&m, &m), Ordering::Equal);
        }
    }

    #[test]
    fn block_eliminates() {
        let t = Monomial::new(&[1, 0, 0]);
        let big = Monomial::new(&[0, 5, 5]);
        let ord = MonomialOrder::block(1, MonomialOrder::GrevLex);
        assert_eq!(ord.cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn grevlex_tiebreak_is_reverse_lex() {
        // x*z < y^2 in grevlex on (x, y, z)
        let xz = Monomial::new(&[1, 0, 1]);
        let y2 = Monomial::new(&[0, 2, 0]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&xz, &y2), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &y2), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch() {
        let a = Monomial::new(&[1, 0]);
        let b = Monomial::new(&[1, 0, 0]);
        assert!(MonomialOrder::GrevLex.try_cmp(&a, &b).is_err());
        assert!(a.mul(&b).is_err());
    }
}
