//! Regular sequences, links and unmixed parts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::{codim, is_regular_sequence, multiplicity};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Attempts allowed when searching for a regular sequence.
pub const DEFAULT_RETRIES: usize = 64;

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Monomial::new(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            go(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Products `m * g` spanning the degree `d` part of a homogeneous ideal.
fn spanning_set(i: &Ideal, d: u32) -> Vec<Polynomial> {
    let ring = i.ring();
    let one = ring.field().one();
    let mut out: Vec<Polynomial> = Vec::new();
    for g in i.gens() {
        let Some(dg) = g.total_degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), d - dg) {
            let f = g.mul_term(&one, &m);
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

fn random_element(span: &[Polynomial], rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = span[0].ring();
    let field = ring.field();
    let mut acc = Polynomial::zero(ring);
    for s in span {
        let c = field.random(rng);
        if !field.is_zero(&c) {
            acc = acc.add_unchecked(&s.scale(&c));
        }
    }
    acc
}

fn extends_regular(prefix: &[Polynomial], f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    let mut seq = prefix.to_vec();
    seq.push(f.clone());
    is_regular_sequence(&seq)
}

/// Random combinations of degree-matched multiples of the generators of `I`
/// forming a regular sequence with the requested degrees.
pub fn find_regular_sequence(i: &Ideal, degrees: &[u32], seed: u64) -> Result<Vec<Polynomial>> {
    i.require_homogeneous("regular sequence search")?;
    let spans = degrees
        .iter()
        .map(|&d| {
            let s = spanning_set(i, d);
            if s.is_empty() {
                Err(Error::NoElementsOfDegree(d))
            } else {
                Ok(s)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<Polynomial> = Vec::new();
    let mut attempts = 0;
    while seq.len() < degrees.len() {
        if attempts == DEFAULT_RETRIES {
            return Err(Error::RetriesExhausted(DEFAULT_RETRIES));
        }
        attempts += 1;
        let f = random_element(&spans[seq.len()], &mut rng);
        if extends_regular(&seq, &f)? {
            seq.push(f);
        }
    }
    Ok(seq)
}

/// A maximal regular sequence in `J` of lowest degrees, each element taken
/// in the smallest degree that extends the sequence.
pub fn find_low_degree_sequence(j: &Ideal, seed: u64) -> Result<Vec<Polynomial>> {
    j.require_homogeneous("regular sequence search")?;
    let g = codim(j);
    let degs: Vec<u32> = j.gens().iter().filter_map(Polynomial::total_degree).collect();
    let (lo, hi) = match (degs.iter().min(), degs.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(Error::ZeroIdeal),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<Polynomial> = Vec::new();
    let mut d = lo;
    let mut attempts = 0;
    while (seq.len() as i64) < g {
        if d > hi {
            return Err(Error::RetriesExhausted(attempts));
        }
        let span = spanning_set(j, d);
        let mut found = false;
        if !span.is_empty() {
            // A generic element of degree d extends the sequence iff a few
            // random trials do, except with negligible probability.
            for _ in 0..4 {
                attempts += 1;
                let f = random_element(&span, &mut rng);
                if extends_regular(&seq, &f)? {
                    seq.push(f);
                    found = true;
                    break;
                }
            }
        }
        if !found {
            d += 1;
        }
    }
    Ok(seq)
}

#[derive(Debug, Clone)]
pub struct LinkResult {
    pub z: Vec<Polynomial>,
    pub linked: Ideal,
    pub source: Ideal,
    pub z_in_source: bool,
    pub z_regular: bool,
    pub multiplicity_complementary: bool,
}

fn check_sequence(i: &Ideal, z: &[Polynomial]) -> Result<Ideal> {
    if z.is_empty() {
        return Err(Error::Precondition("the sequence is empty".into()));
    }
    for f in z {
        if !PolyRing::same(f.ring(), i.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let zi = Ideal::new(i.ring(), z.to_vec())?;
    if !is_regular_sequence(z)? {
        return Err(Error::Precondition("the sequence is not regular".into()));
    }
    Ok(zi)
}

fn mult_or_zero(i: &Ideal) -> Result<i64> {
    if i.is_unit() {
        Ok(0)
    } else {
        multiplicity(i)
    }
}

/// `(z) : I` for a maximal regular sequence `z` inside `I`.
pub fn link(i: &Ideal, z: &[Polynomial]) -> Result<LinkResult> {
    i.require_homogeneous("link")?;
    let zi = check_sequence(i, z)?;
    if !i.contains_ideal(&zi)? {
        return Err(Error::Precondition("the sequence is not contained in the ideal".into()));
    }
    if codim(i) != z.len() as i64 {
        return Err(Error::Precondition(format!(
            "sequence length {} differs from the codimension {}",
            z.len(),
            codim(i)
        )));
    }
    let linked = zi.colon(i)?;
    let complementary = multiplicity(&zi)? == multiplicity(i)? + mult_or_zero(&linked)?;
    Ok(LinkResult {
        z: z.to_vec(),
        linked,
        source: i.clone(),
        z_in_source: true,
        z_regular: true,
        multiplicity_complementary: complementary,
    })
}

fn proper_nonzero(j: &Ideal) -> Result<()> {
    j.require_homogeneous("unmixed part")?;
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// The top-dimensional part of `J` as the double link `(z) : ((z) : J)`.
pub fn unmixed_part_with_seed(j: &Ideal, seed: u64) -> Result<Ideal> {
    proper_nonzero(j)?;
    let z = find_low_degree_sequence(j, seed)?;
    let zi = Ideal::new(j.ring(), z)?;
    if zi.equals(j)? {
        return Ok(j.clone());
    }
    zi.colon(&zi.colon(j)?)
}

pub fn unmixed_part(j: &Ideal) -> Result<Ideal> {
    unmixed_part_with_seed(j, 0)
}

pub fn is_unmixed(i: &Ideal) -> Result<bool> {
    i.equals(&unmixed_part(i)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkPairReport {
    pub a_is_link_of_b: bool,
    pub b_is_link_of_a: bool,
    pub multiplicity_complementary: bool,
}

impl LinkPairReport {
    pub fn all(&self) -> bool {
        self.a_is_link_of_b && self.b_is_link_of_a && self.multiplicity_complementary
    }
}

/// Checks `A = (z):B`, `B = (z):A` and `e(R/(z)) = e(R/A) + e(R/B)`.
pub fn verify_link_pair(a: &Ideal, b: &Ideal, z: &[Polynomial]) -> Result<LinkPairReport> {
    let zi = check_sequence(a, z)?;
    if a.is_unit() || b.is_unit() {
        return Err(Error::Precondition("linked ideals must be proper".into()));
    }
    if !a.contains_ideal(&zi)? || !b.contains_ideal(&zi)? {
        return Err(Error::Precondition("the sequence is not contained in both ideals".into()));
    }
    Ok(LinkPairReport {
        a_is_link_of_b: zi.colon(b)?.equals(a)?,
        b_is_link_of_a: zi.colon(a)?.equals(b)?,
        multiplicity_complementary: multiplicity(&zi)? == multiplicity(a)? + multiplicity(b)?,
    })
}
