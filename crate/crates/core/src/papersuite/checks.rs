use std::fmt::Debug;

use rayon::prelude::*;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::ideal::Ideal;
use crate::invariants::{codim, multiplicity};
use crate::linkage::{find_regular_sequence, is_unmixed, unmixed_part_with_seed, verify_link_pair};
use crate::poly::Polynomial;
use crate::resolution::{check_buchsbaum_eisenbud, minors, pd_quotient, FreeResolution};
use crate::ring::RingExt;

use super::constructors::*;
use super::harness::{link_bound, random_height_two};
use super::{CheckEntry, Status};

type Outcome = Result<(bool, String)>;
pub(super) type Group = Box<dyn Fn(FieldSpec, u64) -> Vec<CheckEntry> + Send + Sync>;

struct Sink {
    anchor: String,
    out: Vec<CheckEntry>,
}

impl Sink {
    fn new(anchor: &str) -> Sink {
        Sink {
            anchor: anchor.into(),
            out: Vec::new(),
        }
    }

    fn push(&mut self, id: String, status: Status, detail: String) {
        self.out.push(CheckEntry {
            check_id: id,
            anchor: self.anchor.clone(),
            status,
            detail,
        });
    }

    fn put(&mut self, id: impl Into<String>, r: Outcome) {
        let (status, detail) = match r {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.push(id.into(), status, detail);
    }

    fn skip(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.push(id.into(), Status::Skipped, detail.into());
    }
}

fn canonical(i: &Ideal) -> String {
    let gens: Vec<String> = i.gb().elements().iter().map(|g| g.to_string()).collect();
    format!("[{}]", gens.join(", "))
}

fn same(got: &Ideal, want: &Ideal) -> Outcome {
    Ok(if got.equals(want)? {
        (true, "equal".into())
    } else {
        (false, format!("got {}, expected {}", canonical(got), canonical(want)))
    })
}

fn value<T: PartialEq + Debug>(got: T, want: T) -> (bool, String) {
    if got == want {
        (true, format!("{got:?}"))
    } else {
        (false, format!("got {got:?}, expected {want:?}"))
    }
}

fn at_most(got: usize, max: usize) -> (bool, String) {
    (got <= max, format!("{got} <= {max}"))
}

fn pd_claim(i: &Ideal, claim: PdClaim) -> Outcome {
    let pd = pd_quotient(i)?;
    Ok(match claim {
        PdClaim::Exact(n) => value(pd, n),
        PdClaim::AtMost(n) => at_most(pd, n),
        PdClaim::AtMostVars => {
            let (ok, d) = at_most(pd, i.ring().nvars());
            (ok, format!("bound-only: {d} variables"))
        }
    })
}

fn acyclic(res: &FreeResolution) -> Outcome {
    let r = check_buchsbaum_eisenbud(res)?;
    let steps: Vec<String> = r
        .steps
        .iter()
        .map(|s| format!("rank {} codim {:?}", s.rank, s.minors_codim))
        .collect();
    Ok((r.acyclic, steps.join("; ")))
}

fn unmixed(i: &Ideal, want: bool) -> Outcome {
    Ok(value(is_unmixed(i)?, want))
}

fn mult(i: &Ideal, want: i64) -> Outcome {
    Ok(value(multiplicity(i)?, want))
}

fn contains_quadric(i: &Ideal) -> bool {
    i.gb()
        .elements()
        .iter()
        .any(|g| g.total_degree().is_some_and(|d| d <= 2))
}

fn lemma33(field: FieldSpec, e: u32, generic: bool) -> Vec<CheckEntry> {
    let mut s = Sink::new("Lemma 3.3");
    let p = format!("lemma33.{}.e{e}", if generic { "generic" } else { "degenerate" });
    let (i, res) = match lemma33_family(field, e, generic) {
        Ok(v) => v,
        Err(err) => {
            s.put(format!("{p}.construct"), Err(err));
            return s.out;
        }
    };
    s.put(format!("{p}.complex"), acyclic(&res));
    if generic {
        let maps = res.maps();
        s.put(format!("{p}.minors1"), minors(&maps[0], 1).and_then(|m| same(&m, &i)));
        let outcome = (|| {
            let m = Ideal::parse(i.ring(), &["x", "y", "a", "b"])?;
            let want = if e == 1 { i.clone() } else { i.product(&m.power(e - 1)?)? };
            same(&minors(&maps[1], e as usize + 1)?, &want)
        })();
        s.put(format!("{p}.minors2"), outcome);
        if e >= 2 {
            let outcome = (|| {
                let m = Ideal::parse(i.ring(), &["x", "y", "a", "b"])?;
                same(&minors(&maps[2], e as usize - 1)?, &m.power(e - 1)?)
            })();
            s.put(format!("{p}.minors3"), outcome);
        }
        s.put(format!("{p}.mult"), mult(&i, e as i64));
        s.put(format!("{p}.unmixed"), unmixed(&i, true));
        // e = 1 collapses to (x, y), a complete intersection.
        let want = if e == 1 { 2 } else { 3 };
        s.put(format!("{p}.pd"), pd_quotient(&i).map(|pd| value(pd, want)));
    } else {
        s.put(format!("{p}.unmixed"), unmixed(&i, false));
        s.put(format!("{p}.pd"), pd_quotient(&i).map(|pd| at_most(pd, 3)));
    }
    s.out
}

fn lemma35(field: FieldSpec, generic: bool) -> Vec<CheckEntry> {
    let mut s = Sink::new("Lemma 3.5");
    let p = format!("lemma35.{}", if generic { "generic" } else { "degenerate" });
    let (i, res) = match lemma35_ideal(field, generic) {
        Ok(v) => v,
        Err(err) => {
            s.put(format!("{p}.construct"), Err(err));
            return s.out;
        }
    };
    s.put(format!("{p}.complex"), acyclic(&res));
    if generic {
        let r = i.ring();
        let outcome = (|| {
            let m = Ideal::parse(r, &["x", "y", "c^2", "d"])?;
            same(&minors(&res.maps()[1], 3)?, &i.product(&m)?)
        })();
        s.put(format!("{p}.minors2"), outcome);
        let outcome = (|| {
            let m = Ideal::parse(r, &["x", "y", "c^2", "d"])?;
            same(&minors(&res.maps()[2], 1)?, &m)
        })();
        s.put(format!("{p}.minors3"), outcome);
        s.put(format!("{p}.mult"), mult(&i, 3));
        s.put(format!("{p}.unmixed"), unmixed(&i, true));
        s.put(format!("{p}.pd"), pd_quotient(&i).map(|pd| at_most(pd, 3)));
        // Associativity: the (x,y) and (x,v) components contribute 2 and 1.
        let outcome = (|| {
            let along_xy = i.saturate(&r.parse("v")?)?;
            let along_xv = i.saturate(&r.parse("y")?)?;
            let parts = (multiplicity(&along_xy)?, multiplicity(&along_xv)?);
            let total = multiplicity(&i)?;
            Ok((
                parts == (2, 1) && total == 3,
                format!("{} + {} = {total}", parts.0, parts.1),
            ))
        })();
        s.put("multiplicity.associativity", outcome);
    } else {
        s.put(format!("{p}.unmixed"), unmixed(&i, false));
        s.put(format!("{p}.pd"), pd_quotient(&i).map(|pd| at_most(pd, 3)));
    }
    s.out
}

fn lemma35_specialized(field: FieldSpec, _seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Lemma 3.5, v in (x,y)");
    let i = match lemma35_primary(field) {
        Ok(i) => i,
        Err(err) => {
            s.put("lemma35.primary.construct", Err(err));
            return s.out;
        }
    };
    s.put("lemma35.primary.mult", mult(&i, 3));
    s.put("lemma35.primary.unmixed", unmixed(&i, true));
    let outcome = (|| {
        let p = Ideal::parse(i.ring(), &["x", "y"])?;
        let ok = i.contains_ideal(&p.power(3)?)? && p.contains_ideal(&i)?;
        Ok((ok, "(x,y)^3 in I in (x,y)".to_string()))
    })();
    s.put("lemma35.primary.radical", outcome);
    let outcome = (|| {
        let p = Ideal::parse(i.ring(), &["x", "y"])?;
        let x = i.ring().parse("x")?;
        Ok(value(i.colon(&p)?.contains(&x)?, true))
    })();
    let mut t = Sink::new("Lemma 3.7");
    t.put("lemma37.colon_contains_x", outcome);
    s.out.extend(t.out);
    s.out
}

fn prop34(field: FieldSpec, t: Prop34Type) -> Vec<CheckEntry> {
    let mut s = Sink::new(&format!("Proposition 3.4 ({})", t.label()));
    let p = format!("prop34.{}", t.label().replace('°', "0"));
    let i = match prop34_type(field, t) {
        Ok(i) => i,
        Err(err) => {
            s.put(format!("{p}.construct"), Err(err));
            return s.out;
        }
    };
    s.put(format!("{p}.codim"), Ok(value(codim(&i), 2)));
    s.put(format!("{p}.mult"), mult(&i, 2));
    s.put(format!("{p}.unmixed"), unmixed(&i, true));
    s.put(
        format!("{p}.pd"),
        pd_quotient(&i).map(|pd| {
            let (ok, d) = value(pd, t.pd());
            (ok && pd <= 3, d)
        }),
    );
    let parts: Option<[&[&str]; 2]> = match t {
        Prop34Type::II => Some([&["x", "y"], &["x", "v"]]),
        Prop34Type::III => Some([&["x", "y"], &["u", "v"]]),
        _ => None,
    };
    if let Some([a, b]) = parts {
        let outcome = (|| {
            let meet = Ideal::parse(i.ring(), a)?.intersect(&Ideal::parse(i.ring(), b)?)?;
            same(&meet, &i)
        })();
        s.put(format!("{p}.decomposition"), outcome);
    }
    s.out
}

fn triple(field: FieldSpec, _seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Section 3, triple structure");
    let i = match triple_structure_example(field) {
        Ok(i) => i,
        Err(err) => {
            s.put("triple.construct", Err(err));
            return s.out;
        }
    };
    let r = i.ring();
    s.put("triple.mult", mult(&i, 3));
    s.put("triple.unmixed", unmixed(&i, true));
    let outcome = (|| {
        let q = r.parse("(a*c + d*x)*x + (b*c + e*y)*y")?;
        let l = r.parse("(a*x + b*y)*x")?;
        Ok((i.contains(&q)? && i.contains(&l)?, "q and (ax+by)x".into()))
    })();
    s.put("triple.members", outcome);
    let outcome = (|| {
        let m = Ideal::parse(r, &["x", "y"])?;
        let built = m
            .power(3)?
            .sum(&Ideal::parse(r, &["a*x + b*y"])?.product(&m)?)?
            .sum(&Ideal::parse(r, &["(a*x + b*y)*c + d*x^2 + e*y^2"])?)?;
        same(&built, &i)
    })();
    s.put("triple.generators", outcome);
    let outcome = (|| {
        let m = Ideal::parse(r, &["x", "y"])?;
        Ok((i.contains_ideal(&m.power(3)?)? && m.contains_ideal(&i)?, "(x,y)^3 in I in (x,y)".into()))
    })();
    s.put("triple.radical", outcome);
    s.out
}

fn one_case(c: &CaseCheck) -> Vec<CheckEntry> {
    let mut s = Sink::new(c.anchor);
    let p = format!("cases.{}", c.id);
    let target = match &c.link {
        Some(claimed) => {
            let outcome = (|| same(&Ideal::new(c.ideal.ring(), c.z.clone())?.colon(&c.ideal)?, claimed))();
            s.put(format!("{p}.link"), outcome);
            let outcome = verify_link_pair(&c.ideal, claimed, &c.z).map(|r| (r.all(), format!("{r:?}")));
            s.put(format!("{p}.pair"), outcome);
            claimed
        }
        None => &c.ideal,
    };
    s.put(format!("{p}.pd"), pd_claim(target, c.pd));
    if let Some(e) = c.multiplicity {
        s.put(format!("{p}.mult"), mult(&c.ideal, e));
    }
    for (label, a, b) in &c.equalities {
        s.put(format!("{p}.{}", label.replace(' ', "_")), same(a, b));
    }
    s.out
}

fn cases(field: FieldSpec, _seed: u64) -> Vec<CheckEntry> {
    match case_checks(field) {
        Ok(cs) => cs.par_iter().flat_map_iter(one_case).collect(),
        Err(err) => {
            let mut s = Sink::new("Section 4");
            s.put("cases.construct", Err(err));
            s.out
        }
    }
}

fn stillman(field: FieldSpec, seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Section 4, sharpness example");
    let j = match stillman_example(field) {
        Ok(j) => j,
        Err(err) => {
            s.put("stillman.construct", Err(err));
            return s.out;
        }
    };
    s.put("stillman.pd", pd_quotient(&j).map(|pd| value(pd, 4)));
    let outcome = (|| {
        let u = unmixed_part_with_seed(&j, seed)?;
        let want = Ideal::parse(j.ring(), &["x^2", "x*y", "y^2", "a*x + b*y"])?;
        let (ok, d) = same(&u, &want)?;
        Ok((ok && contains_quadric(&u), d))
    })();
    s.put("stillman.unmixed_part", outcome);
    let outcome = (|| {
        let u = unmixed_part_with_seed(&j, seed)?;
        Ok(value(multiplicity(&j)?, multiplicity(&u)?))
    })();
    s.put("stillman.mult", outcome);
    s.out
}

fn quadric_bound(field: FieldSpec, seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Theorem 4.2");
    let outcome = (|| {
        let i = prop34_type(field, Prop34Type::IV)?;
        let qp = find_regular_sequence(&i, &[2, 3], seed)?;
        mult(&Ideal::new(i.ring(), qp)?, 6)
    })();
    s.put("quadric.ci_multiplicity", outcome);
    let sources: [(&str, Result<Ideal>); 3] = [
        ("quadric.spot.mult2", prop34_type(field, Prop34Type::IV)),
        ("quadric.spot.mult3", lemma35_primary(field)),
        (
            "quadric.spot.alpha",
            ring(field, "x y c").and_then(|r| ideal(&r, &["x^2", "x*y", "c*x + y^2"])),
        ),
    ];
    for (id, i) in sources {
        let outcome = (|| {
            let i = i?;
            let mut gens = find_regular_sequence(&i, &[3, 3], seed)?;
            gens.extend(find_regular_sequence(&i, &[3], seed.wrapping_add(1))?);
            let j = Ideal::new(i.ring(), gens)?;
            let u = unmixed_part_with_seed(&j, seed)?;
            if !contains_quadric(&u) {
                return Ok(None);
            }
            Ok(Some(at_most(pd_quotient(&j)?, 4)))
        })();
        match outcome {
            Ok(None) => s.skip(id, "unmixed part has no quadric"),
            Ok(Some(v)) => s.put(id, Ok(v)),
            Err(e) => s.put(id, Err(e)),
        }
    }
    s.out
}

fn chain(field: FieldSpec, seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Final theorem, link chain");
    let c = match final_theorem_chain(field, seed) {
        Ok(c) => c,
        Err(err) => {
            s.put("chain.construct", Err(err));
            return s.out;
        }
    };
    let outcome = (|| {
        let es = (
            multiplicity(&c.i)?,
            multiplicity(&c.i_prime)?,
            multiplicity(&c.k)?,
            multiplicity(&c.k_prime)?,
        );
        Ok(value(es, (5, 4, 2, 2)))
    })();
    s.put("chain.multiplicities", outcome);
    let outcome = (|| {
        let es = [&c.p, &c.qp, &c.qq]
            .iter()
            .map(|z| multiplicity(&Ideal::new(c.k.ring(), z.to_vec())?))
            .collect::<Result<Vec<_>>>()?;
        Ok(value(es, vec![9, 6, 4]))
    })();
    s.put("chain.complete_intersections", outcome);
    s.put("chain.quadric", Ok(value(contains_quadric(&c.i_prime), true)));
    let pairs: [(&str, &Ideal, &Ideal, &Vec<Polynomial>); 3] = [
        ("chain.link.i_iprime", &c.i, &c.i_prime, &c.p),
        ("chain.link.iprime_k", &c.i_prime, &c.k, &c.qp),
        ("chain.link.k_kprime", &c.k, &c.k_prime, &c.qq),
    ];
    for (id, a, b, z) in pairs {
        s.put(id, verify_link_pair(a, b, z).map(|r| (r.all(), format!("{r:?}"))));
    }
    s.put("chain.pd_kprime", pd_quotient(&c.k_prime).map(|pd| at_most(pd, 3)));
    let outcome = (|| Ok(value(pd_quotient(&c.i_prime)?, pd_quotient(&c.k_prime)?)))();
    s.put("chain.pd_linked", outcome);
    s.out
}

fn small_lemmas(field: FieldSpec, seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Lemma 3.1");
    let outcome = (|| {
        let r = ring(field, "x y a b v")?;
        let j = ideal(&r, &["x^2", "x*y", "y^2*v", "(a*x + b*y)*v"])?;
        let i = ideal(&r, &["x", "v"])?.intersect(&ideal(&r, &["x^2", "x*y", "y^2", "a*x + b*y"])?)?;
        let hyp = is_unmixed(&j)?
            && i.contains_ideal(&j)?
            && codim(&i) == codim(&j)
            && multiplicity(&i)? == multiplicity(&j)?;
        Ok((hyp && j.equals(&i)?, "unmixed, nested, same height and multiplicity".into()))
    })();
    s.put("lemma31.instance", outcome);

    let mut t = Sink::new("Lemma 3.2");
    let outcome = (|| {
        let r = ring(field, "x y z")?;
        let j = ideal(&r, &["x"])?.intersect(&ideal(&r, &["y", "z"])?)?;
        let i = ideal(&r, &["y", "z"])?;
        let u = unmixed_part_with_seed(&j, seed)?;
        let ok = i.contains_ideal(&j)? && u.equals(&ideal(&r, &["x"])?)? && !i.contains_ideal(&u)?;
        Ok((ok, format!("unmixed part {}", canonical(&u))))
    })();
    t.put("lemma32.height_needed", outcome);
    let outcome = (|| {
        let r = ring(field, "x y a b")?;
        let p = ideal(&r, &["x^2", "x*y", "y^2", "a*x + b*y"])?;
        let j = p.intersect(&ideal(&r, &["x", "y", "a", "b"])?.power(3)?)?;
        let i = ideal(&r, &["x", "y"])?;
        let u = unmixed_part_with_seed(&j, seed)?;
        let ok = codim(&i) == codim(&j) && i.contains_ideal(&j)? && i.contains_ideal(&u)? && u.equals(&p)?;
        Ok((ok, format!("unmixed part {}", canonical(&u))))
    })();
    t.put("lemma32.nested", outcome);
    s.out.extend(t.out);

    let mut t = Sink::new("Lemma 3.6");
    let outcome = (|| {
        let r = ring(field, "x y a v")?;
        let l = ideal(&r, &["x", "v"])?;
        let k1 = ideal(&r, &["x", "y"])?.power(2)?;
        let k2 = ideal(&r, &["a*x + v*y"])?;
        if !l.contains_ideal(&k2)? {
            return Ok((false, "K2 not in L".into()));
        }
        same(&l.intersect(&k1.sum(&k2)?)?, &l.intersect(&k1)?.sum(&k2)?)
    })();
    t.put("lemma36.instance", outcome);
    s.out.extend(t.out);
    s.out
}

/// Number of random ideals in the link bound section of the report.
pub(super) const LINK_BOUND_CASES: u64 = 5;

fn link_bounds(field: FieldSpec, seed: u64) -> Vec<CheckEntry> {
    let mut s = Sink::new("Theorem 2.4");
    for k in 0..LINK_BOUND_CASES {
        let outcome = (|| {
            let j = random_height_two(field, seed.wrapping_mul(1000).wrapping_add(k))?;
            let c = link_bound(&j, seed)?;
            Ok((c.holds, format!("pd(J) = {}, pd(link) = {}", c.pd_j, c.pd_link)))
        })();
        s.put(format!("thm24.case{k}"), outcome);
    }
    s.out
}

pub(super) fn groups() -> Vec<Group> {
    let mut g: Vec<Group> = Vec::new();
    for e in 1..=5 {
        g.push(Box::new(move |f, _| lemma33(f, e, true)));
    }
    for e in 2..=5 {
        g.push(Box::new(move |f, _| lemma33(f, e, false)));
    }
    g.push(Box::new(|f, _| lemma35(f, true)));
    g.push(Box::new(|f, _| lemma35(f, false)));
    g.push(Box::new(lemma35_specialized));
    for t in Prop34Type::ALL {
        g.push(Box::new(move |f, _| prop34(f, t)));
    }
    g.push(Box::new(triple));
    g.push(Box::new(cases));
    g.push(Box::new(stillman));
    g.push(Box::new(quadric_bound));
    g.push(Box::new(chain));
    g.push(Box::new(small_lemmas));
    g.push(Box::new(link_bounds));
    g
}
