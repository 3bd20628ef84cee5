use alloc::format;
use alloc::vec::Vec;

use super::{LieAlgebra, LieError};
use crate::exactmath::{ExactError, ExactMatrix, Scalar, Subspace};

/// `Der(X)` as a Lie algebra under the commutator, together with the
/// `n x n` matrix realizing each of its basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationAlgebra {
    pub algebra: LieAlgebra,
    pub basis_maps: Vec<ExactMatrix>,
    space: Subspace,
    base_dim: usize,
}

impl DerivationAlgebra {
    /// Dimension of the algebra the derivations act on.
    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    /// The derivations as a subspace of `gl(n)` in row-major coordinates.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// `sum_k coords[k] * basis_maps[k]`.
    pub fn realize(&self, coords: &[Scalar]) -> Result<ExactMatrix, LieError> {
        self.algebra.check_vector(coords)?;
        let n = self.base_dim;
        let flat = self.space.combine(coords);
        Ok(ExactMatrix::new(self.algebra.field(), n, n, flat)?)
    }

    /// Coordinates of a matrix in the derivation basis, or `None` when it is
    /// not a derivation.
    pub fn coordinates_of(&self, m: &ExactMatrix) -> Result<Option<Vec<Scalar>>, LieError> {
        if m.rows() != self.base_dim || m.cols() != self.base_dim {
            return Err(LieError::DimensionMismatch {
                expected: self.base_dim,
                found: m.rows().max(m.cols()),
            });
        }
        Ok(self.space.coordinates(m.entries())?)
    }
}

fn check_square(l: &LieAlgebra, d: &ExactMatrix) -> Result<(), LieError> {
    if d.rows() != l.dim() || d.cols() != l.dim() {
        return Err(LieError::DimensionMismatch {
            expected: l.dim(),
            found: if d.rows() != l.dim() { d.rows() } else { d.cols() },
        });
    }
    if d.field() != l.field() {
        return Err(ExactError::FieldMismatch {
            left: l.field(),
            right: d.field(),
        }
        .into());
    }
    Ok(())
}

/// `D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j]` for every basis pair.
pub fn is_derivation(l: &LieAlgebra, d: &ExactMatrix) -> Result<bool, LieError> {
    check_square(l, d)?;
    let n = l.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| d.column_vec(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(l.bracket_basis(i, j))?;
            let a = l.bracket_unchecked(&images[i], &l.basis_vector(j));
            let b = l.bracket_unchecked(&l.basis_vector(i), &images[j]);
            if lhs.iter().zip(a.iter().zip(&b)).any(|(x, (y, z))| x != &(y + z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solves the derivation condition as a linear system in the `n^2` entries
/// of `D` (unknown `D[r][c]` at index `n r + c`) and returns `Der(X)`.
pub fn derivations(x: &LieAlgebra) -> Result<DerivationAlgebra, LieError> {
    x.require_valid()?;
    let n = x.dim();
    let field = x.field();
    let system = derivation_system(x);
    let space = system.kernel();
    let basis_maps: Vec<ExactMatrix> = space
        .basis()
        .row_iter()
        .map(|r| ExactMatrix::new(field, n, n, r.to_vec()))
        .collect::<Result<_, _>>()?;

    let d = basis_maps.len();
    let mut constants = Vec::with_capacity(d * d * d);
    for a in &basis_maps {
        for b in &basis_maps {
            let c = a.commutator(b)?;
            let coords = space
                .coordinates(c.entries())?
                .expect("derivations are closed under the commutator");
            constants.extend(coords);
        }
    }
    let labels: Vec<_> = (1..=d).map(|i| format!("d{i}")).collect();
    let algebra = LieAlgebra::from_constants(field, d, constants)?.with_labels(labels)?;
    Ok(DerivationAlgebra {
        algebra,
        basis_maps,
        space,
        base_dim: n,
    })
}

/// Rows indexed by `(i < j, m)`:
/// `sum_k c_ij^k D[m][k] - sum_k D[k][i] c_kj^m - sum_k D[k][j] c_ik^m = 0`.
pub(crate) fn derivation_system(x: &LieAlgebra) -> ExactMatrix {
    let n = x.dim();
    let field = x.field();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut m = ExactMatrix::zero(field, pairs * n, n * n);
    let mut row = 0;
    for i in 0..n {
        for j in i + 1..n {
            for out in 0..n {
                for k in 0..n {
                    let idx = out * n + k;
                    let mut v = m.get(row, idx).clone();
                    v = &v + x.structure_constant(i, j, k);
                    m.set(row, idx, v);

                    let idx = k * n + i;
                    let v = m.get(row, idx) - x.structure_constant(k, j, out);
                    m.set(row, idx, v);

                    let idx = k * n + j;
                    let v = m.get(row, idx) - x.structure_constant(i, k, out);
                    m.set(row, idx, v);
                }
                row += 1;
            }
        }
    }
    m
}
