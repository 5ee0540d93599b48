//! Exact commutative algebra for linkage and projective dimension of
//! codimension two ideals.

pub mod error;
pub mod expr;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod linkage;
pub mod resolution;
pub mod monomial;
pub mod papersuite;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use ideal::Ideal;
pub use invariants::{codim, dimension, hilbert, is_regular_sequence, leading_ideal, multiplicity, HilbertSeries};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use ring::{PolyRing, Ring, RingExt};
pub use resolution::{
    betti, check_buchsbaum_eisenbud, minimize, minors, pd_module, pd_quotient, rank, resolve,
    subquotient_presentation, syzygies, BettiTable, FreeResolution, PolyMatrix,
};
pub use linkage::{
    find_regular_sequence, is_unmixed, link, unmixed_part, unmixed_part_with_seed, verify_link_pair,
    LinkPairReport, LinkResult,
};
