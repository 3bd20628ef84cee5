use alloc::string::ToString;
use alloc::vec::Vec;

use super::{LieAlgebra, LieError};
use crate::exactmath::{ExactError, ExactMatrix, Scalar, Subspace};

/// A linear map between Lie algebras; column `j` of the matrix is the image
/// of the `j`-th domain basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    domain: LieAlgebra,
    codomain: LieAlgebra,
    matrix: ExactMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    NotHom,
    Hom,
    MonoHom,
}

impl LinearMap {
    pub fn new(domain: LieAlgebra, codomain: LieAlgebra, matrix: ExactMatrix) -> Result<Self, LieError> {
        if matrix.rows() != codomain.dim() {
            return Err(LieError::DimensionMismatch {
                expected: codomain.dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != domain.dim() {
            return Err(LieError::DimensionMismatch {
                expected: domain.dim(),
                found: matrix.cols(),
            });
        }
        for f in [domain.field(), matrix.field()] {
            if f != codomain.field() {
                return Err(ExactError::FieldMismatch {
                    left: codomain.field(),
                    right: f,
                }
                .into());
            }
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// The map sending domain basis vector `j` to `images[j]`.
    pub fn from_images(domain: LieAlgebra, codomain: LieAlgebra, images: &[Vec<Scalar>]) -> Result<Self, LieError> {
        if images.len() != domain.dim() {
            return Err(LieError::DimensionMismatch {
                expected: domain.dim(),
                found: images.len(),
            });
        }
        for v in images {
            codomain.check_vector(v)?;
        }
        let field = codomain.field();
        let cols = ExactMatrix::from_rows(field, codomain.dim(), images)?;
        LinearMap::new(domain, codomain, cols.transpose())
    }

    pub fn identity(l: &LieAlgebra) -> Self {
        LinearMap {
            domain: l.clone(),
            codomain: l.clone(),
            matrix: ExactMatrix::identity(l.field(), l.dim()),
        }
    }

    pub fn zero(domain: &LieAlgebra, codomain: &LieAlgebra) -> Self {
        LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: ExactMatrix::zero(codomain.field(), codomain.dim(), domain.dim()),
        }
    }

    pub fn domain(&self) -> &LieAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &LieAlgebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        self.domain.check_vector(v)?;
        Ok(self.matrix.mul_vec(v)?)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, LieError> {
        if inner.codomain.dim() != self.domain.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.domain.dim(),
                found: inner.codomain.dim(),
            });
        }
        LinearMap::new(
            inner.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&inner.matrix)?,
        )
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.matrix.transpose())
    }
}

/// Homomorphism test on all basis pairs, plus injectivity.
pub fn check_hom(f: &LinearMap) -> HomKind {
    let dom = &f.domain;
    let cod = &f.codomain;
    let images: Vec<Vec<Scalar>> = (0..dom.dim()).map(|j| f.matrix.column_vec(j)).collect();
    for i in 0..dom.dim() {
        for j in i + 1..dom.dim() {
            let lhs = f.matrix.mul_vec(dom.bracket_basis(i, j)).expect("shape checked");
            let rhs = cod.bracket_unchecked(&images[i], &images[j]);
            if lhs != rhs {
                return HomKind::NotHom;
            }
        }
    }
    if f.kernel().is_zero() {
        HomKind::MonoHom
    } else {
        HomKind::Hom
    }
}

/// A witnessed isomorphism: an injective homomorphism between algebras of
/// equal dimension.
pub fn is_isomorphic_via(f: &LinearMap) -> bool {
    f.domain.dim() == f.codomain.dim() && check_hom(f) == HomKind::MonoHom
}

fn require_hom(f: &LinearMap, name: &str) -> Result<(), LieError> {
    if check_hom(f) == HomKind::NotHom {
        return Err(LieError::NotHomomorphism(name.to_string()));
    }
    Ok(())
}

/// `X --k--> A <--β-- B`, `A --α--> B`: true iff `α ∘ β = id_B`, `k` is
/// injective and `im k = ker α`.
pub fn verify_split_extension(
    a: &LieAlgebra,
    k: &LinearMap,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Result<bool, LieError> {
    let dims = [
        (k.codomain.dim(), a.dim()),
        (alpha.domain.dim(), a.dim()),
        (beta.codomain.dim(), a.dim()),
        (beta.domain.dim(), alpha.codomain.dim()),
    ];
    for (found, expected) in dims {
        if found != expected {
            return Err(LieError::DimensionMismatch { expected, found });
        }
    }
    require_hom(k, "k")?;
    require_hom(alpha, "alpha")?;
    require_hom(beta, "beta")?;
    let section = alpha.matrix.mul(&beta.matrix)?;
    if section != ExactMatrix::identity(a.field(), alpha.codomain.dim()) {
        return Ok(false);
    }
    if !k.kernel().is_zero() {
        return Ok(false);
    }
    Ok(k.image() == alpha.kernel())
}
