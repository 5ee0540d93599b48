use std::cmp::Ordering;

use proptest::prelude::*;
use syzygy_core::*;

const VARS: &str = "x y z w";

fn ring() -> Ring {
    PolyRing::grevlex(FieldSpec::default_prime(), VARS).unwrap()
}

/// A term is a coefficient and a multiset of variable indices; its degree is
/// the multiset size.
type RawTerm = (i64, Vec<usize>);

fn raw_form(n: usize, deg: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec((-6i64..=6, prop::collection::vec(0..n, deg)), 1..=3)
}

fn raw_forms(n: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = Vec<Vec<RawTerm>>> {
    prop::collection::vec((1..=max_deg).prop_flat_map(move |d| raw_form(n, d)), 1..=max_gens)
}

fn build(r: &Ring, raw: &[RawTerm]) -> Polynomial {
    let n = r.nvars();
    let terms = raw
        .iter()
        .map(|(c, vars)| {
            let mut e = vec![0u16; n];
            for &v in vars {
                e[v] += 1;
            }
            Term { coeff: r.field().from_i64(*c), mono: Monomial::new(&e) }
        })
        .collect();
    Polynomial::from_terms(r, terms)
}

fn build_all(r: &Ring, raw: &[Vec<RawTerm>]) -> Vec<Polynomial> {
    raw.iter().map(|t| build(r, t)).filter(|p| !p.is_zero()).collect()
}

fn build_ideal(r: &Ring, raw: &[Vec<RawTerm>]) -> Ideal {
    Ideal::new(r, build_all(r, raw)).unwrap()
}

fn gb_strings(i: &Ideal) -> Vec<String> {
    i.gb().elements().iter().map(|g| g.to_string()).collect()
}

fn proper(i: &Ideal) -> bool {
    !i.is_zero() && !i.is_unit()
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..4, n).prop_map(|e| Monomial::new(&e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gb_ignores_generator_order(raw in raw_forms(4, 4, 3), seed in any::<u64>()) {
        let r = ring();
        let gens = build_all(&r, &raw);
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k.max(1));
        shuffled.reverse();
        let a = Ideal::new(&r, gens).unwrap();
        let b = Ideal::new(&r, shuffled).unwrap();
        prop_assert_eq!(gb_strings(&a), gb_strings(&b));
        let ca = a.canonical_minimal().unwrap();
        let cb = b.canonical_minimal().unwrap();
        prop_assert_eq!(ca.gens(), cb.gens());
    }

    #[test]
    fn ring_laws(raw in raw_forms(4, 3, 3)) {
        let r = ring();
        let mut p = build_all(&r, &raw);
        while p.len() < 3 {
            p.push(Polynomial::one(&r));
        }
        let (f, g, h) = (&p[0], &p[1], &p[2]);
        prop_assert_eq!(f * g, g * f);
        prop_assert_eq!(&(f * g) * h, f * &(g * h));
        prop_assert_eq!(f * &(g + h), &(f * g) + &(f * h));
        prop_assert!((f - f).is_zero());
        prop_assert_eq!((f * g).total_degree().unwrap(), f.total_degree().unwrap() + g.total_degree().unwrap());
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        let orders = [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::block(2, MonomialOrder::GrevLex),
        ];
        for o in &orders {
            let ac = a.mul(&c).unwrap();
            let bc = b.mul(&c).unwrap();
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&ac, &bc));
            prop_assert_ne!(o.cmp(&ac, &a), Ordering::Less);
        }
    }

    #[test]
    fn normal_form_is_reduced(raw in raw_forms(4, 3, 3), f in raw_form(4, 3)) {
        let r = ring();
        let i = build_ideal(&r, &raw);
        let f = build(&r, &f);
        let nf = normal_form(&f, i.gb()).unwrap();
        let diff = &f - &nf;
        prop_assert!(i.contains(&diff).unwrap());
        for t in nf.terms() {
            for g in i.gb().elements() {
                prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn containments(a in raw_forms(4, 3, 2), b in raw_forms(4, 2, 2)) {
        let r = ring();
        let i = build_ideal(&r, &a);
        let j = build_ideal(&r, &b);
        prop_assume!(!j.is_zero());
        let prod = i.product(&j).unwrap();
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.contains_ideal(&prod).unwrap());
        prop_assert!(i.contains_ideal(&meet).unwrap());
        prop_assert!(j.contains_ideal(&meet).unwrap());
        let q = i.colon(&j).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&q.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn iterated_colon(a in raw_forms(4, 3, 2), f in raw_form(4, 1), g in raw_form(4, 1)) {
        let r = ring();
        let i = build_ideal(&r, &a);
        let (f, g) = (build(&r, &f), build(&r, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lhs = i.colon_poly(&(&f * &g)).unwrap();
        let rhs = i.colon_poly(&f).unwrap().colon_poly(&g).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn modular_law(l in raw_forms(4, 2, 2), k in raw_forms(4, 2, 2), c in raw_form(4, 1)) {
        let r = ring();
        let l = build_ideal(&r, &l);
        let k1 = build_ideal(&r, &k);
        prop_assume!(!l.is_zero());
        let k2 = Ideal::new(&r, vec![&l.gens()[0] * &build(&r, &c)]).unwrap();
        let lhs = l.intersect(&k1.sum(&k2).unwrap()).unwrap();
        let rhs = l.intersect(&k1).unwrap().sum(&k2).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn hilbert_data_ignores_order(raw in raw_forms(4, 3, 3)) {
        let r = ring();
        let i = build_ideal(&r, &raw);
        prop_assume!(proper(&i));
        let lex = r.with_order(MonomialOrder::Lex).unwrap();
        let gens: Vec<_> = i.gens().iter().map(|g| g.reorder_into(&lex)).collect();
        let j = Ideal::new(&lex, gens).unwrap();
        let (h1, h2) = (hilbert(&i).unwrap(), hilbert(&j).unwrap());
        prop_assert_eq!(h1.dim, h2.dim);
        prop_assert_eq!(h1.multiplicity(), h2.multiplicity());
        for d in 0..6 {
            prop_assert_eq!(h1.value(d), h2.value(d));
        }
    }

    #[test]
    fn multiplicity_drops_along_containment(raw in raw_forms(4, 2, 3), extra in raw_form(4, 2)) {
        let r = ring();
        let i = build_ideal(&r, &raw);
        prop_assume!(proper(&i));
        let j = i.sum(&Ideal::new(&r, vec![build(&r, &extra)]).unwrap()).unwrap();
        prop_assume!(!j.is_unit() && codim(&j) == codim(&i));
        prop_assert!(multiplicity(&j).unwrap() <= multiplicity(&i).unwrap());
    }

    #[test]
    fn bezout(d1 in 1usize..=3, d2 in 1usize..=3, f in any::<u64>()) {
        let r = ring();
        let dense = |deg: usize, salt: u64| {
            let mut s = f ^ salt;
            let mut terms = Vec::new();
            for _ in 0..4 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let vars = (0..deg).map(|k| ((s >> (8 * k + 16)) % 4) as usize).collect();
                terms.push((((s >> 8) % 11) as i64 - 5, vars));
            }
            build(&r, &terms)
        };
        let seq = vec![dense(d1, 1), dense(d2, 2)];
        prop_assume!(seq.iter().all(|p| !p.is_zero()));
        prop_assume!(is_regular_sequence(&seq).unwrap());
        let ci = Ideal::new(&r, seq).unwrap();
        prop_assert_eq!(multiplicity(&ci).unwrap(), (d1 * d2) as i64);
        prop_assert_eq!(codim(&ci), 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolution_bounds(raw in raw_forms(4, 3, 2)) {
        let r = ring();
        let i = build_ideal(&r, &raw);
        prop_assume!(proper(&i));
        let res = resolve(&i).unwrap();
        prop_assert!(res.composites_zero().unwrap());
        let pd = betti(&res).pd();
        prop_assert!(pd as i64 >= codim(&i));
        prop_assert!(pd <= r.nvars());
        prop_assert_eq!(betti(&minimize(&res)), betti(&res));

        let mut rev = i.gens().to_vec();
        rev.reverse();
        let again = resolve(&Ideal::new(&r, rev).unwrap()).unwrap();
        prop_assert_eq!(betti(&again), betti(&res));
    }

    #[test]
    fn unmixed_part_is_stable(raw in raw_forms(4, 3, 2), seed in 0u64..1000) {
        let r = ring();
        let i = build_ideal(&r, &raw);
        prop_assume!(proper(&i));
        let u = unmixed_part_with_seed(&i, seed).unwrap();
        prop_assert!(u.contains_ideal(&i).unwrap());
        prop_assert_eq!(codim(&u), codim(&i));
        prop_assert_eq!(multiplicity(&u).unwrap(), multiplicity(&i).unwrap());
        let uu = unmixed_part_with_seed(&u, seed + 1).unwrap();
        prop_assert!(uu.equals(&u).unwrap());
        prop_assert!(is_unmixed(&u).unwrap());
    }
}
