use syzygy_core::*;

fn ring(field: FieldSpec, vars: &str) -> Ring {
    PolyRing::grevlex(field, vars).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::default_prime(), FieldSpec::Rationals]
}

#[test]
fn projective_dimensions() {
    for f in fields() {
        let r = ring(f, "x y u v");
        assert_eq!(pd_quotient(&ideal(&r, &["x*y", "y*u", "u*x"])).unwrap(), 2);
        assert_eq!(pd_quotient(&ideal(&r, &["x", "y*u*v"])).unwrap(), 2);
        assert_eq!(pd_quotient(&ideal(&r, &["x*u", "x*v", "y*u", "y*v"])).unwrap(), 3);
        let r = ring(f, "x y a b");
        assert_eq!(pd_quotient(&ideal(&r, &["x^2", "x*y", "y^2", "a*x + b*y"])).unwrap(), 3);
        assert_eq!(pd_quotient(&ideal(&r, &["x", "y", "a", "b"])).unwrap(), 4);
    }
}

#[test]
fn stillman_example_has_pd_four() {
    let r = ring(FieldSpec::default_prime(), "x y a b l1 l2 l3 l4");
    let j = ideal(&r, &["l1*x^2 + l2*y^2", "l3*x*y", "l4*(a*x + b*y)"]);
    let res = resolve(&j).unwrap();
    assert_eq!(res.length(), 4);
    assert!(res.composites_zero().unwrap());
}

#[test]
fn degenerate_ideals() {
    let r = ring(FieldSpec::default_prime(), "x y");
    assert_eq!(pd_quotient(&Ideal::zero(&r)).unwrap(), 0);
    assert_eq!(pd_quotient(&Ideal::unit(&r)).unwrap(), 0);
    assert!(betti(&resolve(&Ideal::unit(&r)).unwrap()).entries.is_empty());
    assert!(pd_quotient(&ideal(&r, &["x^2 + y"])).is_err());
}

#[test]
fn betti_numbers_of_twisted_cubic() {
    let r = ring(FieldSpec::default_prime(), "x y z w");
    let i = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
    let b = betti(&resolve(&i).unwrap());
    assert_eq!(b.get(0, 0), 1);
    assert_eq!(b.get(1, 2), 3);
    assert_eq!(b.get(2, 3), 2);
    assert_eq!(b.pd(), 2);
}

#[test]
fn syzygies_of_rows() {
    let r = ring(FieldSpec::default_prime(), "x y");
    let m = PolyMatrix::new(
        &r,
        vec![vec![r.parse("x").unwrap(), r.parse("y").unwrap(), Polynomial::zero(&r)]],
        vec![0],
        vec![1, 1, 1],
    )
    .unwrap();
    let k = syzygies(&m).unwrap();
    assert_eq!(k.cols(), 2);
    assert!(m.mul(&k).unwrap().is_zero());
    let single = PolyMatrix::from_ideal(&ideal(&r, &["x*y"])).unwrap();
    assert_eq!(syzygies(&single).unwrap().cols(), 0);
}

#[test]
fn subquotients() {
    let r = ring(FieldSpec::default_prime(), "x y");
    let i = ideal(&r, &["x", "y"]);
    assert_eq!(pd_module(&subquotient_presentation(&i, &i).unwrap()).unwrap(), 0);
    let p = subquotient_presentation(&i, &ideal(&r, &["x"])).unwrap();
    assert_eq!(pd_module(&p).unwrap(), 1);
    assert!(subquotient_presentation(&ideal(&r, &["x"]), &i).is_err());

    let r = ring(FieldSpec::default_prime(), "x y a b");
    let z = ideal(&r, &["x^2", "y^2"]);
    let link = z.colon(&ideal(&r, &["x^2", "x*y", "y^2", "a*x + b*y"])).unwrap();
    assert_eq!(pd_module(&subquotient_presentation(&link, &z).unwrap()).unwrap(), 2);
}

#[test]
fn minors_and_rank() {
    let r = ring(FieldSpec::default_prime(), "x y a v");
    let m = PolyMatrix::new(
        &r,
        vec![
            r.parse_all(&["x", "0"]).unwrap(),
            r.parse_all(&["a", "-y"]).unwrap(),
            r.parse_all(&["v", "x"]).unwrap(),
        ],
        vec![0, 0, 0],
        vec![1, 1],
    )
    .unwrap();
    assert_eq!(rank(&m), 2);
    let i2 = minors(&m, 2).unwrap();
    assert!(i2.equals(&ideal(&r, &["x^2", "x*y", "a*x + v*y"])).unwrap());
    assert!(minors(&m, 3).is_err());
}

#[test]
fn koszul_complex_is_acyclic() {
    let r = ring(FieldSpec::default_prime(), "x y");
    let res = resolve(&ideal(&r, &["x", "y"])).unwrap();
    let report = check_buchsbaum_eisenbud(&res).unwrap();
    assert!(report.acyclic, "{report:?}");
    assert_eq!(report.steps.len(), 2);
}
