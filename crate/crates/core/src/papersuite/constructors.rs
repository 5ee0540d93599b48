//! Explicit ideals, complexes and links used by the verification suite.
//!
//! Coefficient forms are fresh variables; a form of degree two is the
//! square of a fresh variable.

use serde::Serialize;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution::{FreeResolution, PolyMatrix};
use crate::ring::{PolyRing, Ring, RingExt};

pub(crate) fn ring(field: FieldSpec, vars: &str) -> Result<Ring> {
    PolyRing::grevlex(field, vars)
}

pub(crate) fn ideal(r: &Ring, gens: &[&str]) -> Result<Ideal> {
    Ideal::parse(r, gens)
}

fn mono(x: &str, i: u32, y: &str, j: u32) -> String {
    match (i, j) {
        (0, 0) => "1".into(),
        (_, 0) => format!("{x}^{i}"),
        (0, _) => format!("{y}^{j}"),
        _ => format!("{x}^{i}*{y}^{j}"),
    }
}

/// `(x,y)^e + (ax+by)` with its explicit length three complex. The generic
/// ring is `k[x,y,a,b]`; the degenerate one is `k[x,y,a,b,c]` with `a, b`
/// replaced by `ca, cb`, so that `x, y, a, b` has codimension three.
/// For `e = 1` the last map is empty and is left out.
pub fn lemma33_family(field: FieldSpec, e: u32, generic: bool) -> Result<(Ideal, FreeResolution)> {
    assert!(e >= 1, "e must be positive");
    let (r, a, b, delta) = if generic {
        (ring(field, "x y a b")?, "a", "b", 1)
    } else {
        (ring(field, "x y a b c")?, "(c*a)", "(c*b)", 2)
    };
    let p = |s: &str| r.parse(s);
    let zero = || Polynomial::zero(&r);
    let e_us = e as usize;
    let ei = e as i64;

    let mut row = vec![p(&format!("{a}*x + {b}*y"))?];
    for k in 0..=e {
        row.push(p(&mono("x", e - k, "y", k))?);
    }
    let i = Ideal::new(&r, row.clone())?;
    let mut t1 = vec![delta + 1];
    t1.extend(std::iter::repeat_n(ei, e_us + 1));
    let phi1 = PolyMatrix::new(&r, vec![row], vec![0], t1.clone())?;

    let mut m2 = vec![vec![zero(); 2 * e_us]; e_us + 2];
    for k in 0..e_us {
        m2[0][k] = p(&mono("x", e - 1 - k as u32, "y", k as u32))?;
        m2[1 + k][k] = p(&format!("-{a}"))?;
        m2[2 + k][k] = p(&format!("-{b}"))?;
        m2[1 + k][e_us + k] = p("y")?;
        m2[2 + k][e_us + k] = p("-x")?;
    }
    let mut t2 = vec![ei + delta; e_us];
    t2.extend(std::iter::repeat_n(ei + 1, e_us));
    let phi2 = PolyMatrix::new(&r, m2, t1, t2.clone())?;

    let mut maps = vec![phi1, phi2];
    if e >= 2 {
        let mut m3 = vec![vec![zero(); e_us - 1]; 2 * e_us];
        for k in 0..e_us - 1 {
            m3[k][k] = p("y")?;
            m3[k + 1][k] = p("-x")?;
            m3[e_us + k][k] = p(a)?;
            m3[e_us + k + 1][k] = p(b)?;
        }
        maps.push(PolyMatrix::new(&r, m3, t2, vec![ei + delta + 1; e_us - 1])?);
    }
    Ok((i, FreeResolution::new(&r, vec![0], maps)?))
}

/// `(x^2, xy, y^2v, cx + dyv)` with `c` a quadric and `d` linear, plus its
/// explicit complex. The degenerate variant replaces `c, d` by `wc, w` in
/// `k[x,y,v,c,w]`, giving them the common factor `w`.
pub fn lemma35_ideal(field: FieldSpec, unmixed_variant: bool) -> Result<(Ideal, FreeResolution)> {
    let (r, c, d) = if unmixed_variant {
        (ring(field, "x y v c d")?, "c^2", "d")
    } else {
        (ring(field, "x y v c w")?, "(w*c)", "w")
    };
    let p = |s: String| r.parse(&s);
    let row = vec![
        p("x^2".into())?,
        p("x*y".into())?,
        p("y^2*v".into())?,
        p(format!("{c}*x + {d}*y*v"))?,
    ];
    let i = Ideal::new(&r, row.clone())?;
    let phi1 = PolyMatrix::new(&r, vec![row], vec![0], vec![2, 2, 3, 3])?;
    let grid = [
        ["-y".to_string(), "0".into(), c.into(), "0".into()],
        ["x".into(), "-y*v".into(), format!("{d}*v"), format!("-{c}")],
        ["0".into(), "x".into(), "0".into(), format!("-{d}")],
        ["0".into(), "0".into(), "-x".into(), "y".into()],
    ];
    let m2 = grid
        .iter()
        .map(|row| row.iter().map(|s| p(s.clone())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let phi2 = PolyMatrix::new(&r, m2, vec![2, 2, 3, 3], vec![3, 4, 4, 4])?;
    let m3 = [c, d, "y", "x"]
        .iter()
        .map(|s| Ok(vec![p(s.to_string())?]))
        .collect::<Result<Vec<_>>>()?;
    let phi3 = PolyMatrix::new(&r, m3, vec![3, 4, 4, 4], vec![5])?;
    Ok((i, FreeResolution::new(&r, vec![0], vec![phi1, phi2, phi3])?))
}

/// The primary specialization `v := y` of the previous ideal.
pub fn lemma35_primary(field: FieldSpec) -> Result<Ideal> {
    let r = ring(field, "x y c d")?;
    ideal(&r, &["x^2", "x*y", "y^3", "c^2*x + d*y^2"])
}

/// The types of height two unmixed ideals of multiplicity two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Prop34Type {
    /// A linear form and an irreducible quadric.
    I,
    /// `(x,y) ∩ (x,v)`.
    II,
    /// `(x,y) ∩ (u,v)`.
    III,
    /// `(x,y)^2 + (ax+by)`.
    IV,
    /// `(x, y^2)`.
    IVCirc,
}

impl Prop34Type {
    pub const ALL: [Prop34Type; 5] = [
        Prop34Type::I,
        Prop34Type::II,
        Prop34Type::III,
        Prop34Type::IV,
        Prop34Type::IVCirc,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Prop34Type::I => "i",
            Prop34Type::II => "ii",
            Prop34Type::III => "iii",
            Prop34Type::IV => "iv",
            Prop34Type::IVCirc => "iv°",
        }
    }

    /// Projective dimension of the quotient.
    pub fn pd(self) -> usize {
        match self {
            Prop34Type::III | Prop34Type::IV => 3,
            _ => 2,
        }
    }
}

pub fn prop34_type(field: FieldSpec, t: Prop34Type) -> Result<Ideal> {
    match t {
        Prop34Type::I => ideal(&ring(field, "x y u v")?, &["x", "y*u - v^2"]),
        Prop34Type::II => ideal(&ring(field, "x y v")?, &["x", "y*v"]),
        Prop34Type::III => ideal(&ring(field, "x y u v")?, &["x*u", "x*v", "y*u", "y*v"]),
        Prop34Type::IV => ideal(&ring(field, "x y a b")?, &["x^2", "x*y", "y^2", "a*x + b*y"]),
        Prop34Type::IVCirc => ideal(&ring(field, "x y")?, &["x", "y^2"]),
    }
}

/// The seven-generator multiplicity three structure on `(x,y)` in
/// `k[a,b,c,d,e,x,y]`.
pub fn triple_structure_example(field: FieldSpec) -> Result<Ideal> {
    let r = ring(field, "a b c d e x y")?;
    ideal(
        &r,
        &[
            "x^3",
            "x^2*y",
            "x*y^2",
            "y^3",
            "a*x^2 + b*x*y",
            "a*x*y + b*y^2",
            "a*c*x + b*c*y + d*x^2 + e*y^2",
        ],
    )
}

/// `(l1 x^2 + l2 y^2, l3 xy, l4 (ax+by))` in `k[x,y,a,b,l1..l4]`.
pub fn stillman_example(field: FieldSpec) -> Result<Ideal> {
    let r = ring(field, "x y a b l1 l2 l3 l4")?;
    ideal(&r, &["l1*x^2 + l2*y^2", "l3*x*y", "l4*(a*x + b*y)"])
}

/// Claimed projective dimension of a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PdClaim {
    Exact(usize),
    AtMost(usize),
    /// Only the trivial bound by the number of variables is checked.
    AtMostVars,
}

/// One explicitly described ideal with its claimed link and invariants.
#[derive(Debug, Clone)]
pub struct CaseCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub ideal: Ideal,
    /// Regular sequence for the link; empty when no link is claimed.
    pub z: Vec<Polynomial>,
    pub link: Option<Ideal>,
    /// Applies to `R/link` when a link is given and to `R/ideal` otherwise.
    pub pd: PdClaim,
    pub multiplicity: Option<i64>,
    /// Further claimed equalities between ideals in the same ring.
    pub equalities: Vec<(&'static str, Ideal, Ideal)>,
}

struct Builder {
    r: Ring,
}

impl Builder {
    fn new(field: FieldSpec, vars: &str) -> Result<Builder> {
        Ok(Builder { r: ring(field, vars)? })
    }

    fn i(&self, gens: &[&str]) -> Result<Ideal> {
        ideal(&self.r, gens)
    }

    fn z(&self, gens: &[&str]) -> Result<Vec<Polynomial>> {
        self.r.parse_all(gens)
    }

    fn meet(&self, parts: &[&[&str]]) -> Result<Ideal> {
        let mut acc = self.i(parts[0])?;
        for p in &parts[1..] {
            acc = acc.intersect(&self.i(p)?)?;
        }
        Ok(acc)
    }
}

fn case(id: &'static str, anchor: &'static str, ideal: Ideal, pd: PdClaim) -> CaseCheck {
    CaseCheck {
        id,
        anchor,
        ideal,
        z: Vec::new(),
        link: None,
        pd,
        multiplicity: None,
        equalities: Vec::new(),
    }
}

impl CaseCheck {
    fn linked(mut self, z: Vec<Polynomial>, link: Ideal) -> Self {
        self.z = z;
        self.link = Some(link);
        self
    }

    fn mult(mut self, e: i64) -> Self {
        self.multiplicity = Some(e);
        self
    }

    fn eq(mut self, label: &'static str, a: Ideal, b: Ideal) -> Self {
        self.equalities.push((label, a, b));
        self
    }
}

/// Every explicit ideal and link of the case analysis of three cubics.
pub fn case_checks(field: FieldSpec) -> Result<Vec<CaseCheck>> {
    use PdClaim::*;
    let mut out = Vec::new();

    let b = Builder::new(field, "x y u v")?;
    let i = b.i(&["x*u", "x*v", "y*u", "y*v"])?;
    out.push(
        case("mult2.split.link", "Section 3, multiplicity two", i.clone(), Exact(3))
            .linked(b.z(&["x*u", "y*v"])?, b.i(&["x*u", "y*v", "x*y", "u*v"])?)
            .mult(2)
            .eq("intersection", i, b.meet(&[&["x", "y"], &["u", "v"]])?),
    );

    let b = Builder::new(field, "x y a b")?;
    out.push(
        case(
            "mult2.primary.link",
            "Section 3, multiplicity two",
            b.i(&["x^2", "x*y", "y^2", "a*x + b*y"])?,
            Exact(3),
        )
        .linked(b.z(&["x^2", "y^2"])?, b.i(&["x^2", "x*y", "y^2", "a*x - b*y"])?)
        .mult(2),
    );

    let b = Builder::new(field, "x y z w")?;
    out.push(
        case(
            "case1.minimal_multiplicity",
            "Case 1",
            b.i(&["x*z - y^2", "x*w - y*z", "y*w - z^2"])?,
            Exact(2),
        )
        .mult(3),
    );

    let b = Builder::new(field, "x y")?;
    out.push(case("case2.square", "Case 2", b.i(&["x^2", "x*y", "y^2"])?, Exact(2)).mult(3));

    let b = Builder::new(field, "x y c d")?;
    let i = b.i(&["x^2", "x*y", "y^3", "c^2*x + d*y^2"])?;
    out.push(
        case("case2.linear_colon.link", "Case 2; Theorem 4.2, q in (x,y)^2", i.clone(), Exact(3))
            .linked(b.z(&["x^2", "y^3"])?, b.i(&["x^2", "x*y", "y^3", "c^2*x - d*y^2"])?)
            .mult(3),
    );

    let b = Builder::new(field, "x y a b")?;
    let i = b.i(&["x^3", "x^2*y", "x*y^2", "y^3", "a^2*x + b^2*y"])?;
    out.push(
        case("case2.cubic.link", "Case 2, deg(ax+by) = 3", i, Exact(3))
            .linked(
                b.z(&["x^3", "y^3"])?,
                b.i(&[
                    "x^3",
                    "x^2*y^2",
                    "y^3",
                    "(a^2*x - b^2*y)*x*y",
                    "a^4*x^2 - a^2*b^2*x*y + b^4*y^2",
                ])?,
            )
            .mult(3),
    );

    out.push(case(
        "case2.quadratic.bound",
        "Case 2, deg(ax+by) = 2",
        stillman_example(field)?,
        AtMostVars,
    ));

    let b = Builder::new(field, "u v x y z w")?;
    let q = "y*z - w^2";
    let i = b.meet(&[&["u", "v"], &["x", q]])?;
    out.push(
        case("case3.height4.link", "Case 3", i.clone(), Exact(3))
            .linked(b.z(&["u*x", &format!("v*({q})")])?, b.meet(&[&["x", "v"], &["u", q]])?)
            .mult(3)
            .eq(
                "generators",
                i,
                b.i(&["u*x", &format!("u*({q})"), "v*x", &format!("v*({q})")])?,
            ),
    );
    let i = b.meet(&[&["u", "v"], &["u", q]])?;
    out.push(
        case("case3.height3", "Case 3", i.clone(), Exact(2))
            .mult(3)
            .eq("generators", i, b.i(&["u", &format!("v*({q})")])?),
    );

    let b = Builder::new(field, "u v x y")?;
    let i = b.meet(&[&["u", "v"], &["x", "y^2"]])?;
    out.push(
        case("case4.1.link", "Case 4.1", i, Exact(3))
            .linked(b.z(&["u*x", "v*y^2"])?, b.meet(&[&["x", "v"], &["u", "y^2"]])?)
            .mult(3),
    );

    let b = Builder::new(field, "x y a v")?;
    let i = b.i(&["x^2", "x*y", "a*x + v*y"])?;
    out.push(
        case("case4.2.a.i", "Case 4.2 (a.i)", i.clone(), Exact(2))
            .mult(3)
            .eq(
                "intersection",
                b.meet(&[&["x", "v"], &["x^2", "x*y", "y^2", "a*x + v*y"]])?,
                i.clone(),
            )
            .eq("redundant generator", b.i(&["x^2", "x*y", "y^2*v", "a*x + v*y"])?, i),
    );

    let b = Builder::new(field, "x y a b v")?;
    let i = b.i(&["x^2", "x*y", "y^2*v", "(a*x + b*y)*v"])?;
    out.push(
        case("case4.2.a.ii.link", "Case 4.2 (a.ii)", i.clone(), AtMost(3))
            .linked(b.z(&["x^2", "y^2*v"])?, b.i(&["x^2", "x*y", "y^2*v", "(a*x - b*y)*v"])?)
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "v"], &["x^2", "x*y", "y^2", "a*x + b*y"]])?, i),
    );

    let b = Builder::new(field, "x y a b")?;
    let i = b.i(&["a*x^2", "b*x^2", "a*y^2", "b*y^2", "a*x + b*y"])?;
    out.push(
        case("case4.2.b.i.link", "Case 4.2 (b.i)", i.clone(), Exact(3))
            .linked(
                b.z(&["a*x^2", "b*y^2"])?,
                b.i(&["a*x^2", "b*y^2", "x^2*y^2", "a*b*x*y", "(a*x - b*y)*a*b"])?,
            )
            .mult(3)
            .eq("intersection", b.meet(&[&["a", "b"], &["x^2", "x*y", "y^2", "a*x + b*y"]])?, i),
    );

    let b = Builder::new(field, "x y u v a b")?;
    let p = b.i(&["x^2", "x*y", "y^2", "a*x + b*y"])?;
    let i = b.i(&["u", "v"])?.product(&p)?;
    out.push(
        case("case4.2.b.ii.link", "Case 4.2 (b.ii)", i.clone(), Exact(3))
            .linked(
                b.z(&["x^2*u", "y^2*v"])?,
                b.i(&["x^2*u", "y^2*v", "x^2*y^2", "x*y*u*v", "(a*x - b*y)*u*v"])?,
            )
            .mult(3)
            .eq("intersection", b.i(&["u", "v"])?.intersect(&p)?, i),
    );

    let b = Builder::new(field, "x y a b v")?;
    let p = b.i(&["x^2", "x*y", "y^2", "a*x + b*y"])?;
    let i = b.i(&["b", "v"])?.product(&p)?;
    out.push(
        case("case4.2.b.ii.shared.link", "Case 4.2 (b.ii)", i.clone(), Exact(3))
            .linked(
                b.z(&["x^2*b", "y^2*v"])?,
                b.i(&["x^2*b", "y^2*v", "x^2*y^2", "x*y*b*v", "(a*x - b*y)*b*v"])?,
            )
            .mult(3)
            .eq("intersection", b.i(&["b", "v"])?.intersect(&p)?, i),
    );

    let b = Builder::new(field, "x y a b v")?;
    let i = b.i(&["x^2", "x*y", "y^2*v", "a^2*x + b*y*v"])?;
    out.push(
        case("case4.3.a.link", "Case 4.3 (a)", i.clone(), AtMost(3))
            .linked(b.z(&["x^2", "y^2*v"])?, b.i(&["x^2", "x*y", "y^2*v", "a^2*x - b*y*v"])?)
            .mult(3)
            .eq(
                "intersection",
                b.meet(&[&["x", "v"], &["x^2", "x*y", "y^2", "a^2*x + b*y*v"]])?,
                i,
            ),
    );

    let b = Builder::new(field, "x y u v p s")?;
    let i = b.i(&["x^2*u", "x^2*v", "x*y*u", "x*y*v", "y^2*u", "y^2*v", "p*u*x + s*v*y"])?;
    out.push(
        case("case4.3.b.bound", "Case 4.3 (b)", i.clone(), AtMostVars).mult(3).eq(
            "intersection",
            b.meet(&[&["u", "v"], &["x^2", "x*y", "y^2", "p*u*x + s*v*y"]])?,
            i,
        ),
    );

    let b = Builder::new(field, "x y u")?;
    let i = b.i(&["x*y", "y*u", "u*x"])?;
    out.push(
        case("case5.height3", "Case 5", i.clone(), Exact(2))
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "y"], &["y", "u"], &["u", "x"]])?, i),
    );

    let b = Builder::new(field, "x y u v")?;
    let i = b.i(&["x*u", "y*u", "y*v"])?;
    out.push(
        case("case5.height4.chain", "Case 5", i.clone(), Exact(2))
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "y"], &["y", "u"], &["u", "v"]])?, i),
    );
    let i = b.i(&["x", "y*u*v"])?;
    out.push(
        case("case5.height4.star", "Case 5", i.clone(), Exact(2))
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "y"], &["x", "u"], &["x", "v"]])?, i),
    );

    let b = Builder::new(field, "x y u v s")?;
    let i = b.i(&["x*v", "y*v", "x*u*s", "y*u*s"])?;
    out.push(
        case("case5.height5.link", "Case 5", i.clone(), Exact(3))
            .linked(b.z(&["x*v", "y*u*s"])?, b.i(&["x*y", "x*v", "y*u*s", "v*u*s"])?)
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "y"], &["u", "v"], &["v", "s"]])?, i),
    );

    let b = Builder::new(field, "x y u v s t")?;
    let i = b.i(&[
        "x*u*s", "x*u*t", "x*v*s", "x*v*t", "y*u*s", "y*u*t", "y*v*s", "y*v*t",
    ])?;
    out.push(
        case("case5.height6.link", "Case 5", i.clone(), Exact(3))
            .linked(
                b.z(&["x*u*s", "y*v*t"])?,
                b.i(&["x*u*s", "y*v*t", "x*y*u*v", "x*y*s*t", "u*v*s*t"])?,
            )
            .mult(3)
            .eq("intersection", b.meet(&[&["x", "y"], &["u", "v"], &["s", "t"]])?, i),
    );

    let b = Builder::new(field, "x y c d")?;
    out.push(
        case(
            "quadric.general.link",
            "Theorem 4.2, q not in (x,y)^2",
            b.i(&["x^3", "x^2*y", "x*y^2", "y^3", "c*x + d*y"])?,
            Exact(3),
        )
        .linked(
            b.z(&["x^3", "y^3"])?,
            b.i(&[
                "x^3",
                "x^2*y^2",
                "y^3",
                "(c*x - d*y)*x*y",
                "x^2*c^2 - x*y*c*d + y^2*d^2",
            ])?,
        )
        .mult(3),
    );

    let b = Builder::new(field, "x y c")?;
    let back = b.i(&["x^2", "x*y", "c*x + y^2"])?;
    for (id, q, link) in [
        (
            "quadric.alpha0.link",
            "c*x + y^2",
            ["c^2", "c*y", "c*x + y^2"],
        ),
        (
            "quadric.alpha1.link",
            "c*x + x*y + y^2",
            ["c^2 - y^2", "c*y + y^2", "c*x + x*y + y^2"],
        ),
    ] {
        let naive = b.i(&[q, "x^3", "x^2*y", "x*y^2", "y^3"])?;
        out.push(
            case(id, "Theorem 4.2, alpha link", back.clone(), Exact(2))
                .linked(b.z(&[q, "y^3"])?, b.i(&link)?)
                .mult(3)
                .eq("naive colon", b.i(&[q, "y^3"])?.colon(&naive)?, b.i(&link)?),
        );
    }

    Ok(out)
}

/// Multiplicities and links along the chain `I - I' - K - K'`.
#[derive(Debug, Clone)]
pub struct LinkChain {
    pub i: Ideal,
    pub i_prime: Ideal,
    pub k: Ideal,
    pub k_prime: Ideal,
    /// Cubics linking `I` and `I'`.
    pub p: Vec<Polynomial>,
    /// Quadric and cubic linking `I'` and `K`.
    pub qp: Vec<Polynomial>,
    /// Two quadrics linking `K` and `K'`.
    pub qq: Vec<Polynomial>,
}

/// Starts from `K = (x,y)^2 + (ax+by)` and links outwards: `I' = (x^2,y^3):K`
/// contains the quadric `x^2`, and `I` is linked to `I'` by two cubics drawn
/// with `seed`.
pub fn final_theorem_chain(field: FieldSpec, seed: u64) -> Result<LinkChain> {
    let b = Builder::new(field, "x y a b")?;
    let k = b.i(&["x^2", "x*y", "y^2", "a*x + b*y"])?;
    let qp = b.z(&["x^2", "y^3"])?;
    let i_prime = Ideal::new(&b.r, qp.clone())?.colon(&k)?;
    let p = crate::linkage::find_regular_sequence(&i_prime, &[3, 3], seed)?;
    let i = Ideal::new(&b.r, p.clone())?.colon(&i_prime)?;
    let qq = b.z(&["x^2", "y^2"])?;
    let k_prime = Ideal::new(&b.r, qq.clone())?.colon(&k)?;
    Ok(LinkChain {
        i,
        i_prime,
        k,
        k_prime,
        p,
        qp,
        qq,
    })
}
