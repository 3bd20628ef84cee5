use alloc::vec::Vec;

use super::standard::gl;
use super::{LieAlgebra, LieError, LinearMap};
use crate::exactmath::{ExactMatrix, Scalar, Subspace};

/// The adjoint action of a subalgebra `P` on an ideal `U` of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointImage {
    /// `P -> gl(dim U)`, with `P` on its RREF basis.
    pub map: LinearMap,
    /// `ad_p` on `U` for each RREF basis vector `p` of `P`.
    pub matrices: Vec<ExactMatrix>,
    /// `ad(P)` as a subspace of `gl(dim U)` in row-major coordinates.
    pub image: Subspace,
}

impl AdjointImage {
    /// `ad(P)` as a Lie algebra on the RREF basis of `image`.
    pub fn image_algebra(&self) -> Result<LieAlgebra, LieError> {
        self.map.codomain().restrict(&self.image)
    }
}

/// Matrix of `[v, -]` on `U` in the RREF basis of `U`: column `j` holds the
/// coordinates of `[v, u_j]`.
pub fn ad_restricted(l: &LieAlgebra, u: &Subspace, v: &[Scalar]) -> Result<ExactMatrix, LieError> {
    l.check_vector(v)?;
    if u.ambient() != l.dim() {
        return Err(LieError::DimensionMismatch {
            expected: l.dim(),
            found: u.ambient(),
        });
    }
    let k = u.dim();
    let mut m = ExactMatrix::zero(l.field(), k, k);
    for (j, uj) in u.basis().row_iter().enumerate() {
        let w = l.bracket_unchecked(v, uj);
        let coords = u.coordinates(&w)?.ok_or(LieError::NotIdeal)?;
        for (r, c) in coords.into_iter().enumerate() {
            m.set(r, j, c);
        }
    }
    Ok(m)
}

/// `ad: P -> Der(U) ⊆ gl(dim U)`, `p ↦ [p, -]|_U`.
pub fn adjoint_on_ideal(l: &LieAlgebra, p: &Subspace, u: &Subspace) -> Result<AdjointImage, LieError> {
    if !l.is_subalgebra(p)? {
        return Err(LieError::NotSubalgebra);
    }
    if !l.product_subspace(p, u)?.is_subspace_of(u)? {
        return Err(LieError::NotIdeal);
    }
    let matrices: Vec<ExactMatrix> = p
        .basis()
        .row_iter()
        .map(|row| ad_restricted(l, u, row))
        .collect::<Result<_, _>>()?;
    let flat: Vec<Vec<Scalar>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
    let k = u.dim();
    let gl_u = gl(l.field(), k);
    let domain = l.restrict(p)?;
    let map = LinearMap::from_images(domain, gl_u, &flat)?;
    let image = Subspace::span(l.field(), k * k, &flat)?;
    Ok(AdjointImage { map, matrices, image })
}
