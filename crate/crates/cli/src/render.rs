//! Scripts reproducing the report's constructions, one per ideal.

use syzygy_core::papersuite::{
    case_checks, final_theorem_chain, lemma33_family, lemma35_ideal, lemma35_primary, prop34_type,
    stillman_example, triple_structure_example, Prop34Type,
};
use syzygy_core::{FieldSpec, Ideal, MonomialOrder, Polynomial, Result};

fn ring_line(i: &Ideal) -> String {
    let r = i.ring();
    let order = match r.order() {
        MonomialOrder::Lex => " order lex",
        _ => " order grevlex",
    };
    let field = match r.field() {
        FieldSpec::Rationals => "QQ".to_string(),
        FieldSpec::Prime(p) => format!("ZZ/{p}"),
    };
    format!("ring {field}[{}]{order};", r.names().join(","))
}

/// Generators with integer coefficients, as the script grammar requires.
fn list(ps: &[Polynomial]) -> String {
    ps.iter()
        .map(|p| p.clear_denominators().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn basic(i: &Ideal, commands: &[&str]) -> String {
    let mut s = format!("{}\nideal I = {};\n", ring_line(i), list(i.gens()));
    for c in commands {
        s.push_str(&format!("{c}(I);\n"));
    }
    s
}

/// Named scripts for every ideal in the report, over `field`.
pub fn papersuite_scripts(field: FieldSpec, seed: u64) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for e in 1..=5 {
        let (i, _) = lemma33_family(field, e, true)?;
        out.push((format!("lemma33.generic.e{e}"), basic(&i, &["mult", "pd", "isunmixed"])));
        if e >= 2 {
            let (i, _) = lemma33_family(field, e, false)?;
            out.push((format!("lemma33.degenerate.e{e}"), basic(&i, &["pd", "isunmixed"])));
        }
    }
    for (name, variant) in [("generic", true), ("degenerate", false)] {
        let (i, _) = lemma35_ideal(field, variant)?;
        out.push((format!("lemma35.{name}"), basic(&i, &["mult", "pd", "isunmixed"])));
    }
    out.push(("lemma35.primary".into(), basic(&lemma35_primary(field)?, &["mult", "isunmixed"])));
    for t in Prop34Type::ALL {
        let i = prop34_type(field, t)?;
        out.push((format!("prop34.{}", t.label()), basic(&i, &["codim", "mult", "isunmixed", "pd"])));
    }
    out.push(("triple".into(), basic(&triple_structure_example(field)?, &["mult", "isunmixed"])));
    out.push(("stillman".into(), basic(&stillman_example(field)?, &["pd", "unmixed", "mult"])));

    for c in case_checks(field)? {
        let mut s = basic(&c.ideal, &["mult"]);
        if !c.z.is_empty() {
            s.push_str(&format!("ideal Z = {};\nideal L = link(I, Z);\npd(L);\nmult(L);\n", list(&c.z)));
        }
        for (_, a, b) in &c.equalities {
            s.push_str(&format!("gb(ideal({}));\ngb(ideal({}));\n", list(a.gens()), list(b.gens())));
        }
        out.push((format!("case.{}", c.id), s));
    }

    let ch = final_theorem_chain(field, seed)?;
    let mut s = format!("{}\n", ring_line(&ch.k));
    for (name, i) in [("K", &ch.k), ("Iprime", &ch.i_prime), ("I", &ch.i), ("Kprime", &ch.k_prime)] {
        s.push_str(&format!("ideal {name} = {};\nmult({name});\n", list(i.gens())));
    }
    s.push_str(&format!("link(Iprime, {});\n", list(&ch.p)));
    out.push(("chain".into(), s));

    let f = match field {
        FieldSpec::Rationals => "QQ".to_string(),
        FieldSpec::Prime(p) => format!("ZZ/{p}"),
    };
    out.push(("verify".into(), format!("ring {f}[x];\nverify_paper({seed});\n")));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse_script;

    #[test]
    fn scripts_round_trip() {
        let mut scripts = papersuite_scripts(FieldSpec::default_prime(), 1).unwrap();
        assert!(scripts.len() > 40);
        scripts.extend(papersuite_scripts(FieldSpec::Rationals, 1).unwrap());
        for (name, src) in scripts {
            let s = parse_script(&src).unwrap_or_else(|e| panic!("{name}: {e}\n{src}"));
            let printed = s.to_string();
            assert_eq!(parse_script(&printed).unwrap(), s, "{name}");
        }
    }
}
