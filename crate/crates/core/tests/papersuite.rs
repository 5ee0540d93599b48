use syzygy_core::papersuite::*;
use syzygy_core::*;

fn fp() -> FieldSpec {
    FieldSpec::default_prime()
}

#[test]
fn every_check_passes_over_the_prime_field() {
    let report = verify_all(1, fp());
    for e in report.failures() {
        eprintln!("FAIL {} [{}]: {}", e.check_id, e.anchor, e.detail);
    }
    assert!(report.all_passed());
    assert_eq!(report.count(Status::Skipped), 0);
}

#[test]
fn serialization_ignores_runtime() {
    let a = verify_all(3, fp());
    let b = verify_all(3, fp());
    assert_eq!(a.to_json(), b.to_json());
    assert!(!a.to_json().contains("runtime"));
    let ids: Vec<_> = a.entries.iter().map(|e| &e.check_id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn explicit_complexes() {
    let (i, res) = lemma33_family(fp(), 1, true).unwrap();
    assert_eq!(res.maps().len(), 2);
    assert!(i.equals(&Ideal::parse(i.ring(), &["x", "y"]).unwrap()).unwrap());

    let (i, res) = lemma33_family(fp(), 3, true).unwrap();
    assert_eq!(res.ranks(), vec![1, 5, 6, 2]);
    assert!(res.composites_zero().unwrap());
    assert_eq!(minors(&res.maps()[0], 1).unwrap().gens().len(), i.gens().len());

    let (_, res) = lemma35_ideal(fp(), false).unwrap();
    assert!(res.composites_zero().unwrap());
    assert!(check_buchsbaum_eisenbud(&res).unwrap().acyclic);
}

#[test]
fn classification_instances() {
    let iii = prop34_type(fp(), Prop34Type::III).unwrap();
    let r = iii.ring();
    let meet = Ideal::parse(r, &["x", "y"])
        .unwrap()
        .intersect(&Ideal::parse(r, &["u", "v"]).unwrap())
        .unwrap();
    assert!(iii.equals(&meet).unwrap());
    for t in Prop34Type::ALL {
        let i = prop34_type(fp(), t).unwrap();
        assert_eq!(pd_quotient(&i).unwrap(), t.pd(), "type {}", t.label());
    }
}

#[test]
fn triple_structure_members() {
    let i = triple_structure_example(fp()).unwrap();
    let r = i.ring();
    assert!(i.contains(&r.parse("(a*x + b*y)*c + d*x^2 + e*y^2").unwrap()).unwrap());
    assert!(i.contains(&r.parse("(a*x + b*y)*x").unwrap()).unwrap());
    assert!(!i.contains(&r.parse("a*x + b*y").unwrap()).unwrap());
}

#[test]
fn case_list_is_consistent() {
    let cases = case_checks(fp()).unwrap();
    let linked = cases.iter().filter(|c| c.link.is_some()).count();
    assert!(linked >= 15);
    for c in &cases {
        assert_eq!(c.link.is_some(), !c.z.is_empty(), "{}", c.id);
        for f in &c.z {
            assert!(c.ideal.contains(f).unwrap(), "{}", c.id);
        }
    }
}

#[test]
fn link_chain_multiplicities() {
    let c = final_theorem_chain(fp(), 5).unwrap();
    let es: Vec<i64> = [&c.i, &c.i_prime, &c.k, &c.k_prime]
        .iter()
        .map(|i| multiplicity(i).unwrap())
        .collect();
    assert_eq!(es, vec![5, 4, 2, 2]);
}

#[test]
fn link_bound_on_random_ideals() {
    for k in 0..10 {
        let j = random_height_two(fp(), k).unwrap();
        assert_eq!(j.gens().len(), 3);
        assert_eq!(codim(&j), 2);
        let c = link_bound(&j, 1).unwrap();
        assert!(c.holds, "{j}: {c:?}");
    }
}
