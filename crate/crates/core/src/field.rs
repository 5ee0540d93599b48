//! Exact coefficient fields: the rationals and prime fields `Z/p`.
//!
//! A [`Scalar`] carries no reference to its field; every operation goes
//! through the owning [`FieldSpec`], which the polynomial ring stores once.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// A canonical field element: a reduced fraction or the least nonnegative
/// residue mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u32),
    Rat(Box<BigRational>),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// The default prime for heavy computations.
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn prime(p: u64) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn default_prime() -> Self {
        FieldSpec::Prime(Self::DEFAULT_PRIME)
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
            FieldSpec::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(v.into()))),
            FieldSpec::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(v.clone()))),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                let r = ((v % &p) + &p) % &p;
                Scalar::Mod(r.to_u32().expect("residue fits"))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(&**x + &**y))
            }
            _ => unreachable!("scalar does not belong to field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(Box::new(-&**x)),
            _ => unreachable!("scalar does not belong to field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(&**x * &**y))
            }
            _ => unreachable!("scalar does not belong to field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                Scalar::Mod(pow_mod(*x as u64, *p as u64 - 2, *p as u64) as u32)
            }
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(Box::new(x.recip())),
            _ => unreachable!("scalar does not belong to field"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// A random element: uniform over `Z/p`, or a small nonzero-biased
    /// integer in `[-9, 9]` over the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-9..=9)),
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// Signed display form: residues above p/2 print as negatives so that
    /// printed polynomials read the same over every field.
    pub fn format(&self, a: &Scalar) -> String {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (_, Scalar::Rat(r)) => r.to_string(),
            _ => unreachable!("scalar does not belong to field"),
        }
    }

    /// True when the signed display form starts with a minus sign.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => *x > p / 2,
            (_, Scalar::Rat(r)) => r.is_negative(),
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(32001).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert_eq!(FieldSpec::prime(32003).unwrap(), FieldSpec::Prime(32003));
    }

    #[test]
    fn inverse_roundtrip() {
        for field in [FieldSpec::Prime(32003), FieldSpec::Rationals] {
            for v in [1, -1, 2, 7, 12345] {
                let a = field.from_i64(v);
                let inv = field.inv(&a).unwrap();
                assert!(field.is_one(&field.mul(&a, &inv)));
            }
            assert_eq!(field.inv(&field.zero()), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn canonical_residues() {
        let f = FieldSpec::Prime(7);
        assert_eq!(f.from_i64(-1), Scalar::Mod(6));
        assert_eq!(f.format(&f.from_i64(-1)), "-1");
        assert_eq!(f.from_bigint(&BigInt::from(-15)), Scalar::Mod(6));
    }
}
