//! Seeded random three-generated height two ideals and the link bound
//! `pd R/J <= pd R/((a,b):I) + 1` for `I` the unmixed part of `J`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::Ideal;
use crate::invariants::codim;
use crate::linkage::{find_low_degree_sequence, unmixed_part_with_seed};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::pd_quotient;
use crate::ring::{PolyRing, Ring, RingExt};

const SAMPLE_ATTEMPTS: usize = 100;

fn random_form(r: &Ring, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = r.nvars();
    let mut f = Polynomial::zero(r);
    for _ in 0..rng.gen_range(1..=2) {
        let mut exps = vec![0u16; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        let m = Polynomial::monomial(r, r.field().from_i64(c), Monomial::new(&exps));
        f = &f + &m;
    }
    f
}

/// Generators of a height two ideal in the variables `v`.
fn base(r: &Ring, kind: usize, v: &[usize]) -> Vec<Polynomial> {
    let x = |i: usize| r.var(v[i]);
    match kind {
        0 => vec![x(0), x(1)],
        1 => vec![&x(0) * &x(2), &x(0) * &x(3), &x(1) * &x(2), &x(1) * &x(3)],
        2 => vec![
            &x(0) * &x(0),
            &x(0) * &x(1),
            &x(1) * &x(1),
            &(&x(2) * &x(0)) + &(&x(3) * &x(1)),
        ],
        3 => vec![x(0), &x(1) * &x(1)],
        4 => vec![x(0), &x(1) * &x(2)],
        _ => vec![&x(0) * &x(1), &x(1) * &x(2), &x(2) * &x(0)],
    }
}

/// A homogeneous three-generated height two ideal in at most six variables
/// with generators of degree two or three, drawn from `seed`.
pub fn random_height_two(field: FieldSpec, seed: u64) -> Result<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let n = rng.gen_range(4..=6);
        let names = (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().join(" ");
        let r = PolyRing::grevlex(field, &names)?;
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(&mut rng);
        let b = base(&r, rng.gen_range(0..6), &vars);
        let mut gens = Vec::new();
        for _ in 0..3 {
            let d = rng.gen_range(2..=3);
            let mut f = Polynomial::zero(&r);
            for g in &b {
                let dg = g.total_degree().unwrap_or(0);
                if dg <= d && rng.gen_bool(0.6) {
                    f = &f + &(&random_form(&r, d - dg, &mut rng) * g);
                }
            }
            gens.push(f);
        }
        if gens.iter().any(Polynomial::is_zero) {
            continue;
        }
        let j = Ideal::new(&r, gens)?;
        if j.ngens() == 3 && codim(&j) == 2 {
            return Ok(j);
        }
    }
    Err(Error::RetriesExhausted(SAMPLE_ATTEMPTS))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkBoundCase {
    pub nvars: usize,
    pub pd_j: usize,
    pub pd_link: usize,
    pub holds: bool,
}

/// Checks the bound on `J`, with `(a,b)` a lowest degree regular sequence in
/// the unmixed part `I`. When `(a,b) = I` the sequence `(a^2, b)` is used
/// instead so that the link stays proper.
pub fn link_bound(j: &Ideal, seed: u64) -> Result<LinkBoundCase> {
    let i = unmixed_part_with_seed(j, seed)?;
    let mut ab = find_low_degree_sequence(&i, seed)?;
    if Ideal::new(i.ring(), ab.clone())?.equals(&i)? {
        ab[0] = ab[0].pow(2);
    }
    let link = Ideal::new(i.ring(), ab)?.colon(&i)?;
    let pd_j = pd_quotient(j)?;
    let pd_link = pd_quotient(&link)?;
    let holds = pd_j <= pd_link + 1 && (pd_j < 4 || pd_j == pd_link + 1);
    Ok(LinkBoundCase {
        nvars: j.ring().nvars(),
        pd_j,
        pd_link,
        holds,
    })
}
