use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzygy_core::*;

fn ring(vars: &str) -> Ring {
    PolyRing::grevlex(FieldSpec::default_prime(), vars).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

#[test]
fn stillman_unmixed_part() {
    let r = ring("x y a b l1 l2 l3 l4");
    let j = ideal(&r, &["l1*x^2 + l2*y^2", "l3*x*y", "l4*(a*x + b*y)"]);
    let u = unmixed_part(&j).unwrap();
    assert!(u.equals(&ideal(&r, &["x^2", "x*y", "y^2", "a*x + b*y"])).unwrap());
    assert_eq!(multiplicity(&j).unwrap(), multiplicity(&u).unwrap());
}

#[test]
fn divisor_with_a_line() {
    let r = ring("x y z w");
    let j = ideal(&r, &["x"]).intersect(&ideal(&r, &["y", "z"])).unwrap();
    assert!(unmixed_part(&j).unwrap().equals(&ideal(&r, &["x"])).unwrap());
}

#[test]
fn choice_independence() {
    let r = ring("x y u v");
    let j = ideal(&r, &["x*u", "x*v", "y*u*v"]);
    let a = unmixed_part_with_seed(&j, 1).unwrap();
    let b = unmixed_part_with_seed(&j, 99).unwrap();
    assert!(a.equals(&b).unwrap());
}

#[test]
fn complete_intersection_is_its_own_unmixed_part() {
    let r = ring("x y z");
    let j = ideal(&r, &["x^2", "y^3"]);
    assert!(is_unmixed(&j).unwrap());
}

fn random_linear_change(r: &Ring, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = r.nvars();
    (0..n)
        .map(|i| {
            let mut f = r.var(i);
            for k in 0..n {
                if k != i && rng.gen_bool(0.5) {
                    let c = r.constant(rng.gen_range(-3..=3));
                    f = &f + &(&c * &r.var(k));
                }
            }
            f
        })
        .collect()
}

fn change(i: &Ideal, images: &[Polynomial]) -> Ideal {
    let gens = i.gens().iter().map(|g| g.substitute(images).unwrap()).collect();
    Ideal::new(i.ring(), gens).unwrap()
}

/// Mixed ideals built as intersections of primary ideals of known heights;
/// the unmixed part is the intersection of the minimal-height ones.
#[test]
fn unmixed_part_matches_known_decompositions() {
    let r = ring("x y z w");
    let templates: Vec<(Vec<Vec<&str>>, Vec<Vec<&str>>)> = vec![
        (vec![vec!["x", "y"]], vec![vec!["x", "y", "z"]]),
        (vec![vec!["x^2", "x*y", "y^2"]], vec![vec!["x^3", "y^3", "z^3", "x*y*z"]]),
        (vec![vec!["x", "y"], vec!["z", "w"]], vec![vec!["x", "y", "z", "w^2"]]),
        (vec![vec!["x", "y^2"]], vec![vec!["x", "y", "z"]]),
        (vec![vec!["x"]], vec![vec!["y", "z"]]),
        (vec![vec!["x*y"]], vec![vec!["x", "z", "w"]]),
        (vec![vec!["x", "y"], vec!["x", "z"]], vec![vec!["y", "z", "w"]]),
        (vec![vec!["x^2", "y"]], vec![vec!["x^2", "x*y", "y^2", "z^2"]]),
        (vec![vec!["x", "y", "z"]], vec![vec!["x^2", "y^2", "z^2", "w^2"]]),
        (vec![vec!["x*z - y^2", "x*w - y*z", "y*w - z^2"]], vec![vec!["x", "y", "z"]]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = 0;
    for (top, lower) in &templates {
        for _ in 0..2 {
            let images = random_linear_change(&r, &mut rng);
            let top: Vec<Ideal> = top.iter().map(|g| change(&ideal(&r, g), &images)).collect();
            let lower: Vec<Ideal> = lower.iter().map(|g| change(&ideal(&r, g), &images)).collect();
            let expected = top[1..].iter().fold(top[0].clone(), |acc, p| acc.intersect(p).unwrap());
            let j = lower.iter().fold(expected.clone(), |acc, q| acc.intersect(q).unwrap());
            let u = unmixed_part(&j).unwrap();
            assert!(u.equals(&expected).unwrap(), "J = {j}, got {u}, want {expected}");
            assert_eq!(multiplicity(&u).unwrap(), multiplicity(&j).unwrap());
            cases += 1;
        }
    }
    assert_eq!(cases, 20);
}
