//! End-to-end acceptance criteria, one test per criterion. Run with
//! `--nocapture` to see the summary line each criterion prints.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzygy_core::papersuite::*;
use syzygy_core::*;

fn fp() -> FieldSpec {
    FieldSpec::default_prime()
}

fn report(field: FieldSpec) -> &'static CheckReport {
    static FP: OnceLock<CheckReport> = OnceLock::new();
    static QQ: OnceLock<CheckReport> = OnceLock::new();
    let cell = match field {
        FieldSpec::Rationals => &QQ,
        FieldSpec::Prime(_) => &FP,
    };
    cell.get_or_init(|| verify_all(1, field))
}

fn verdict(n: u32, name: &str, ok: bool, detail: String) {
    println!("criterion {n} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} ({name}) failed: {detail}");
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn entries_with<'a>(r: &'a CheckReport, prefixes: &[&str]) -> Vec<&'a CheckEntry> {
    r.entries
        .iter()
        .filter(|e| prefixes.iter().any(|p| e.check_id.starts_with(p)))
        .collect()
}

fn all_pass(es: &[&CheckEntry]) -> bool {
    !es.is_empty() && es.iter().all(|e| e.status == Status::Pass)
}

/// `"; failing: ..."` listing non-passing entries, or empty.
fn failing(es: &[&CheckEntry]) -> String {
    let bad: Vec<String> = es
        .iter()
        .filter(|e| e.status != Status::Pass)
        .map(|e| format!("{}: {}", e.check_id, e.detail))
        .collect();
    suffix(&bad)
}

fn suffix(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join("; "))
    }
}

#[test]
fn criterion_1_identity_suite() {
    let r = report(fp());
    let equalities = r.entries.iter().filter(|e| e.detail == "equal" && e.status == Status::Pass).count();

    // A few of the quoted links, recomputed outside the suite.
    let ring = PolyRing::grevlex(fp(), "x y u v a b c d").unwrap();
    let m2ab = ideal(&ring, &["x^2", "x*y", "y^2", "a*x + b*y"]);
    let quoted = [
        (ideal(&ring, &["x*u", "y*v"]), ideal(&ring, &["x*u", "x*v", "y*u", "y*v"]), ideal(&ring, &["x*u", "y*v", "x*y", "u*v"])),
        (ideal(&ring, &["x^2", "y^2"]), m2ab, ideal(&ring, &["x^2", "x*y", "y^2", "a*x - b*y"])),
        (
            ideal(&ring, &["x^2", "y^3"]),
            ideal(&ring, &["x^2", "x*y", "y^3", "c^2*x + d*y^2"]),
            ideal(&ring, &["x^2", "x*y", "y^3", "c^2*x - d*y^2"]),
        ),
    ];
    let recomputed = quoted.iter().all(|(z, i, want)| z.colon(i).unwrap().equals(want).unwrap());

    let fast = r.runtime < Duration::from_secs(120);
    verdict(
        1,
        "identity suite",
        r.all_passed() && r.count(Status::Skipped) == 0 && equalities >= 25 && recomputed && fast,
        format!(
            "{} checks, {} failed, {} exact ideal equalities, quoted links recomputed: {recomputed}, {:.1?}{}",
            r.entries.len(),
            r.count(Status::Fail),
            equalities,
            r.runtime,
            failing(&r.entries.iter().collect::<Vec<_>>())
        ),
    );
}

/// The projective dimension claims as `(name, holds, value)`.
fn pd_claims(field: FieldSpec) -> Vec<(String, bool, String)> {
    let mut out = Vec::new();
    let r = PolyRing::grevlex(field, "x y u v a b").unwrap();
    for (gens, want) in [
        (&["x*y", "y*u", "u*x"][..], 2),
        (&["x", "y*u*v"][..], 2),
        (&["x^2", "x*y", "y^2", "a*x + b*y"][..], 3),
    ] {
        let pd = pd_quotient(&ideal(&r, gens)).unwrap();
        out.push((format!("({})", gens.join(",")), pd == want, pd.to_string()));
    }
    for c in case_checks(field).unwrap() {
        if let (Some(link), PdClaim::Exact(3)) = (&c.link, c.pd) {
            let pd = pd_quotient(link).unwrap();
            out.push((format!("{} link", c.id), pd == 3, pd.to_string()));
        }
    }
    let j = stillman_example(field).unwrap();
    let pd = pd_quotient(&j).unwrap();
    out.push(("sharpness example".into(), pd == 4, pd.to_string()));
    let u = unmixed_part(&j).unwrap();
    let same = u.equals(&ideal(j.ring(), &["x^2", "x*y", "y^2", "a*x + b*y"])).unwrap();
    out.push(("sharpness example unmixed part".into(), same, u.to_string()));
    out
}

#[test]
fn criterion_2_projective_dimensions() {
    let claims = pd_claims(fp());
    let links = claims.iter().filter(|c| c.0.ends_with(" link")).count();
    let wrong: Vec<String> = claims.iter().filter(|c| !c.1).map(|c| format!("{} = {}", c.0, c.2)).collect();
    verdict(
        2,
        "projective dimensions",
        wrong.is_empty() && links >= 8,
        format!("{} claims, {links} of them links with pd 3{}", claims.len(), suffix(&wrong)),
    );
}

#[test]
fn criterion_3_explicit_families() {
    let r = report(fp());
    let es = entries_with(r, &["lemma33.", "lemma35."]);
    let generic = es.iter().filter(|e| e.check_id.starts_with("lemma33.generic")).count();
    let detail = format!(
        "{} checks ({} on the generic family e = 1..5); pd 2 at e = 1 since the ideal is (x,y){}",
        es.len(),
        generic,
        failing(&es)
    );
    verdict(3, "explicit resolutions", all_pass(&es) && generic == 34, detail);
}

#[test]
fn criterion_4_classification() {
    let r = report(fp());
    let es = entries_with(r, &["prop34."]);
    let mut ok = all_pass(&es) && es.len() == 22;
    for t in Prop34Type::ALL {
        let i = prop34_type(fp(), t).unwrap();
        ok &= codim(&i) == 2
            && multiplicity(&i).unwrap() == 2
            && is_unmixed(&i).unwrap()
            && pd_quotient(&i).unwrap() <= 3;
    }
    verdict(4, "classification instances", ok, format!("{} checks, 5 instances{}", es.len(), failing(&es)));
}

#[test]
fn criterion_5_link_bound_harness() {
    let start = Instant::now();
    let mut holds = 0;
    let mut by_pd: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for k in 0..50 {
        let j = random_height_two(fp(), k).unwrap();
        let shape = j.ring().nvars() <= 6
            && j.gens().len() == 3
            && codim(&j) == 2
            && j.gens().iter().all(|g| g.is_homogeneous() && g.total_degree().unwrap() <= 3);
        let c = link_bound(&j, k).unwrap();
        if c.holds && shape {
            holds += 1;
        } else {
            bad.push(format!("seed {k}: {j}"));
        }
        *by_pd.entry((c.pd_j, c.pd_link)).or_default() += 1;
    }
    let elapsed = start.elapsed();
    let dist: Vec<String> = by_pd.iter().map(|((a, b), n)| format!("({a},{b})x{n}")).collect();
    verdict(
        5,
        "link bound harness",
        holds == 50 && elapsed < Duration::from_secs(300),
        format!("{holds}/50 hold, (pd J, pd link) {}, {elapsed:.1?}{}", dist.join(" "), suffix(&bad)),
    );
}

fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    let n = rng.gen_range(3..=5);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(fp(), &names, MonomialOrder::GrevLex).unwrap()
}

fn maximal(r: &Ring) -> Ideal {
    Ideal::new(r, (0..r.nvars()).map(|i| Polynomial::var(r, i)).collect()).unwrap()
}

#[test]
fn criterion_6_multiplicity_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut bezout = 0;
    for k in 0..20 {
        let r = random_ring(&mut rng);
        let len = rng.gen_range(1..=r.nvars().min(3));
        let degs: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
        let seq = find_regular_sequence(&maximal(&r), &degs, k).unwrap();
        let ci = Ideal::new(&r, seq).unwrap();
        if multiplicity(&ci).unwrap() == degs.iter().map(|&d| d as i64).product::<i64>() {
            bezout += 1;
        }
    }

    let mut unmixed_law = 0;
    let mut mixed = 0;
    for k in 0..20 {
        let j0 = random_height_two(fp(), 100 + k).unwrap();
        let r = j0.ring().clone();
        let embedded = ideal(&r, &["x1", "x2", "x3"]).power(2).unwrap();
        let j = j0.intersect(&embedded).unwrap();
        let u = unmixed_part_with_seed(&j, k).unwrap();
        if !u.equals(&j).unwrap() {
            mixed += 1;
        }
        if multiplicity(&j).unwrap() == multiplicity(&u).unwrap() {
            unmixed_law += 1;
        }
    }

    let mut pairs = 0;
    let mut complementary = 0;
    for c in case_checks(fp()).unwrap() {
        if let Some(link) = &c.link {
            pairs += 1;
            if verify_link_pair(&c.ideal, link, &c.z).unwrap().multiplicity_complementary {
                complementary += 1;
            }
        }
    }
    let ch = final_theorem_chain(fp(), 1).unwrap();
    for (a, b, z) in [(&ch.i, &ch.i_prime, &ch.p), (&ch.i_prime, &ch.k, &ch.qp), (&ch.k, &ch.k_prime, &ch.qq)] {
        pairs += 1;
        if verify_link_pair(a, b, z).unwrap().multiplicity_complementary {
            complementary += 1;
        }
    }

    verdict(
        6,
        "multiplicity laws",
        bezout == 20 && unmixed_law == 20 && mixed == 20 && complementary == pairs,
        format!(
            "Bezout {bezout}/20, unmixed part keeps multiplicity {unmixed_law}/20 ({mixed} mixed), \
             complementary link pairs {complementary}/{pairs}"
        ),
    );
}

#[test]
fn criterion_7_canonicality() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut invariant = 0;
    for _ in 0..100 {
        let r = random_ring(&mut rng);
        let ngens = rng.gen_range(1..=4);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                let terms = (0..rng.gen_range(1..=4))
                    .map(|_| {
                        let mut e = vec![0u16; r.nvars()];
                        for _ in 0..d {
                            e[rng.gen_range(0..r.nvars())] += 1;
                        }
                        Term { coeff: r.field().from_i64(rng.gen_range(-9..=9)), mono: Monomial::new(&e) }
                    })
                    .collect();
                Polynomial::from_terms(&r, terms)
            })
            .collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let a = Ideal::new(&r, gens).unwrap();
        let b = Ideal::new(&r, shuffled).unwrap();
        if a.gb().elements() == b.gb().elements() {
            invariant += 1;
        }
    }

    let mut scripts = 0;
    let mut round_trips = 0;
    for field in [fp(), FieldSpec::Rationals] {
        for (_, src) in syzygy_cli::papersuite_scripts(field, 1).unwrap() {
            scripts += 1;
            let s = syzygy_cli::parse_script(&src).unwrap();
            let printed = s.to_string();
            let again = syzygy_cli::parse_script(&printed).unwrap();
            if again == s && again.to_string() == printed {
                round_trips += 1;
            }
        }
    }

    let base = report(fp());
    let vectors_equal = [2, 3].iter().all(|&seed| verify_all(seed, fp()).status_vector() == base.status_vector());
    let bytes_equal = verify_all(1, fp()).to_json() == base.to_json();

    verdict(
        7,
        "engine canonicality",
        invariant == 100 && round_trips == scripts && vectors_equal && bytes_equal,
        format!(
            "GB permutation invariance {invariant}/100, script round trips {round_trips}/{scripts}, \
             status vector stable across seeds: {vectors_equal}, same-seed report byte-identical: {bytes_equal}"
        ),
    );
}

#[test]
fn criterion_8_characteristic_robustness() {
    let prefixes = ["lemma33.", "lemma35.", "prop34."];
    let (a, b) = (report(fp()), report(FieldSpec::Rationals));
    let diverging: Vec<String> = a
        .status_vector()
        .into_iter()
        .zip(b.status_vector())
        .filter(|(x, y)| x != y)
        .map(|(x, _)| x.0)
        .collect();
    let pds = |f| pd_claims(f).into_iter().map(|c| (c.0, c.1)).collect::<Vec<_>>();
    let (pa, pb) = (pds(fp()), pds(FieldSpec::Rationals));
    let pd_diverging: Vec<String> = pa.iter().zip(&pb).filter(|(x, y)| x != y).map(|(x, _)| x.0.clone()).collect();
    let same_ids = a.entries.len() == b.entries.len() && pa.len() == pb.len();
    let covered = entries_with(b, &prefixes).len();
    verdict(
        8,
        "characteristic robustness",
        same_ids && diverging.is_empty() && pd_diverging.is_empty() && b.all_passed(),
        format!(
            "{} checks and {} pd claims over each field ({covered} on the families and classification), \
             {} diverging, QQ run {:.1?}{}",
            a.entries.len(),
            pa.len(),
            diverging.len() + pd_diverging.len(),
            b.runtime,
            suffix(&[diverging, pd_diverging].concat())
        ),
    );
}
