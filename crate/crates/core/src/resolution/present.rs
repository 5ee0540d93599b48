use crate::error::{Error, Result};
use crate::ideal::Ideal;

use super::matrix::PolyMatrix;
use super::syzygy::{minimal_columns, Augmented};
use super::{minimize, resolve_cokernel};

/// A presentation of `A/B` for homogeneous `B ⊆ A`, over the generators of
/// `A`: the syzygies of those generators, followed by the coordinates of
/// each generator of `B`.
pub fn subquotient_presentation(a: &Ideal, b: &Ideal) -> Result<PolyMatrix> {
    a.require_homogeneous("subquotient numerator")?;
    b.require_homogeneous("subquotient denominator")?;
    if !a.contains_ideal(b)? {
        return Err(Error::Precondition(format!("{b} is not contained in {a}")));
    }
    let ring = a.ring();
    let gens = PolyMatrix::from_ideal(a)?;
    let aug = Augmented::new(&gens);
    let mut columns = minimal_columns(ring, gens.col_twists(), aug.kernel());
    for f in b.gens() {
        let w = aug.lift(std::slice::from_ref(f)).expect("membership checked");
        let t = f.homogeneous_degree().expect("homogeneous");
        columns.push((w, t));
    }
    let twists: Vec<i64> = columns.iter().map(|(_, t)| *t).collect();
    let entries = (0..gens.cols())
        .map(|i| columns.iter().map(|(c, _)| c[i].clone()).collect())
        .collect();
    PolyMatrix::new(ring, entries, gens.col_twists().to_vec(), twists)
}

/// Projective dimension of the cokernel of `p`; 0 for the zero module.
pub fn pd_module(p: &PolyMatrix) -> Result<usize> {
    Ok(minimize(&resolve_cokernel(p)?).length())
}
