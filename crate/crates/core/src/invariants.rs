//! Numerical invariants read off the leading monomial ideal.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// `HS(R/I) = N(t) / (1 - t)^dim` with `N(1) != 0`.
///
/// The unit ideal has the zero series, stored as an empty numerator with
/// dimension -1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub dim: i64,
}

impl HilbertSeries {
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// `dim_k (R/I)_d`.
    pub fn value(&self, d: usize) -> i64 {
        if self.dim < 0 {
            return 0;
        }
        // coefficient of t^d in N(t) * sum_k C(k + dim - 1, dim - 1) t^k
        let dim = self.dim as usize;
        let mut total = 0i64;
        for (i, &c) in self.numerator.iter().enumerate() {
            if i > d {
                break;
            }
            let k = d - i;
            let binom = if dim == 0 {
                (k == 0) as i64
            } else {
                binomial(k + dim - 1, dim - 1)
            };
            total += c * binom;
        }
        total
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// The monomial ideal of leading monomials of the reduced Gröbner basis.
pub fn leading_ideal(i: &Ideal) -> Ideal {
    let ring = i.ring();
    let one = ring.field().one();
    let gens = i
        .gb()
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(ring, one.clone(), m))
        .collect();
    Ideal::new(ring, gens).expect("same ring")
}

type Mono = Vec<u16>;

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimize_monomials(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.iter().map(|&e| e as u32).sum::<u32>());
    let mut out: Vec<Mono> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| divides(g, &m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Numerator of `HS(R/M)` over the denominator `(1 - t)^n`.
fn kpoly(gens: Vec<Mono>, memo: &mut HashMap<Vec<Mono>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return vec![0];
    }
    if let Some(k) = memo.get(&gens) {
        return k.clone();
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for m in &gens {
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (pivot, &most) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i)))
        .expect("nonempty");
    let result = if most <= 1 {
        let mut acc = vec![1i64];
        for m in &gens {
            let d: usize = m.iter().map(|&e| e as usize).sum();
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        acc
    } else {
        let mut plus: Vec<Mono> = gens.iter().filter(|m| m[pivot] == 0).cloned().collect();
        let mut xi = vec![0u16; n];
        xi[pivot] = 1;
        plus.push(xi);
        let colon: Vec<Mono> = gens
            .iter()
            .map(|m| {
                let mut m = m.clone();
                m[pivot] = m[pivot].saturating_sub(1);
                m
            })
            .collect();
        let mut k = kpoly(minimize_monomials(plus), memo);
        let shifted: Vec<i64> = std::iter::once(0)
            .chain(kpoly(minimize_monomials(colon), memo))
            .collect();
        poly_add(&mut k, &shifted);
        k
    };
    memo.insert(gens, result.clone());
    result
}

/// Hilbert series of `R/I` for homogeneous `I`.
pub fn hilbert(i: &Ideal) -> Result<HilbertSeries> {
    i.require_homogeneous("hilbert")?;
    let n = i.ring().nvars() as i64;
    if i.is_unit() {
        return Ok(HilbertSeries {
            numerator: Vec::new(),
            dim: -1,
        });
    }
    let gens: Vec<Mono> = i
        .gb()
        .leading_monomials()
        .iter()
        .map(|m| m.exponents().to_vec())
        .collect();
    let mut memo = HashMap::new();
    let mut num = kpoly(minimize_monomials(gens), &mut memo);
    let mut s = 0;
    while num.iter().sum::<i64>() == 0 {
        let mut q = Vec::with_capacity(num.len());
        let mut acc = 0;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = q;
        s += 1;
    }
    while num.len() > 1 && *num.last().expect("nonempty") == 0 {
        num.pop();
    }
    Ok(HilbertSeries {
        numerator: num,
        dim: n - s,
    })
}

/// Krull dimension of `R/I` as the largest set of variables containing no
/// leading monomial's support; -1 for the unit ideal.
pub fn dimension(i: &Ideal) -> i64 {
    if i.is_unit() {
        return -1;
    }
    let n = i.ring().nvars();
    let supports: Vec<u64> = i
        .gb()
        .leading_monomials()
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (k, _)| acc | (1 << k))
        })
        .collect();
    fn search(next: usize, n: usize, set: u64, size: i64, supports: &[u64], best: &mut i64) {
        if size + (n - next) as i64 <= *best {
            return;
        }
        if next == n {
            *best = size;
            return;
        }
        let with = set | (1 << next);
        if supports.iter().all(|s| s & !with != 0) {
            search(next + 1, n, with, size + 1, supports, best);
        }
        search(next + 1, n, set, size, supports, best);
    }
    let mut best = 0;
    search(0, n, 0, 0, &supports, &mut best);
    best
}

/// Height of a homogeneous ideal: `nvars - dim(R/I)`.
pub fn codim(i: &Ideal) -> i64 {
    i.ring().nvars() as i64 - dimension(i)
}

/// `e(R/I)`, the Hilbert numerator at 1.
pub fn multiplicity(i: &Ideal) -> Result<i64> {
    i.require_homogeneous("multiplicity")?;
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(hilbert(i)?.multiplicity())
}

/// Homogeneous forms are a regular sequence iff they generate an ideal of
/// height equal to their number.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    let first = fs
        .first()
        .ok_or_else(|| Error::Precondition("empty sequence".into()))?;
    let ring = first.ring();
    for f in fs {
        if !PolyRing::same(f.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() || f.is_constant() {
            return Err(Error::Precondition(format!(
                "sequence entries must be nonzero non-units, got {f}"
            )));
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
    }
    let i = Ideal::new(ring, fs.to_vec())?;
    Ok(codim(&i) == fs.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{Ring, RingExt};

    fn ring(vars: &str) -> Ring {
        PolyRing::grevlex(FieldSpec::default_prime(), vars).unwrap()
    }

    #[test]
    fn two_skew_lines() {
        let r = ring("x y u v");
        let i = Ideal::parse(&r, &["x*u", "x*v", "y*u", "y*v"]).unwrap();
        assert_eq!(codim(&i), 2);
        assert_eq!(multiplicity(&i).unwrap(), 2);
        let hs = hilbert(&i).unwrap();
        assert_eq!(hs.dim, 2);
        assert_eq!(hs.value(1), 4);
        assert_eq!(hs.value(2), 6);
    }

    #[test]
    fn degenerate_ideals() {
        let r = ring("x y");
        let zero = Ideal::zero(&r);
        assert_eq!(dimension(&zero), 2);
        assert_eq!(multiplicity(&zero).unwrap(), 1);
        let unit = Ideal::unit(&r);
        assert_eq!(dimension(&unit), -1);
        assert_eq!(hilbert(&unit).unwrap().dim, -1);
        assert_eq!(multiplicity(&unit), Err(Error::UnitIdeal));
        assert!(leading_ideal(&zero).is_zero());
    }

    #[test]
    fn regular_sequences() {
        let r = ring("x y a b");
        assert!(is_regular_sequence(&r.parse_all(&["x", "y", "a", "b"]).unwrap()).unwrap());
        assert!(!is_regular_sequence(&r.parse_all(&["x", "x*y"]).unwrap()).unwrap());
        assert!(is_regular_sequence(&r.parse_all(&["x^2", "y^3"]).unwrap()).unwrap());
        assert!(is_regular_sequence(&[]).is_err());
        assert!(is_regular_sequence(&r.parse_all(&["x^2 + y"]).unwrap()).is_err());
    }

    #[test]
    fn dimension_methods_agree() {
        let r = ring("x y z w");
        for gens in [
            vec!["x*y", "y*z", "z*x"],
            vec!["x^2", "y^3", "z*w"],
            vec!["x*z - y^2", "y*w - z^2", "x*w - y*z"],
        ] {
            let i = Ideal::parse(&r, &gens).unwrap();
            assert_eq!(hilbert(&i).unwrap().dim, dimension(&i));
        }
    }
}
