//! Shared fixtures for the benchmarks.

use syzygy_core::papersuite::{lemma33_family, stillman_example};
use syzygy_core::{FieldSpec, Ideal, PolyRing};

/// `(x,y)^e + (ax+by)`.
pub fn power_family(field: FieldSpec, e: u32) -> Ideal {
    lemma33_family(field, e, true).expect("family").0
}

pub fn sharpness_example(field: FieldSpec) -> Ideal {
    stillman_example(field).expect("example")
}

/// Three dense cubics in four variables.
pub fn dense_cubics(field: FieldSpec) -> Ideal {
    let r = PolyRing::grevlex(field, "x y z w").expect("ring");
    Ideal::parse(
        &r,
        &[
            "x^3 + 2*x*y*z - 3*y^2*w + z^3 - x*w^2",
            "y^3 - x^2*z + 5*x*z*w + 7*w^3 - y*z^2",
            "x^2*y + y*z*w - 4*z^2*w + x*y*w + 2*z^3",
        ],
    )
    .expect("ideal")
}
