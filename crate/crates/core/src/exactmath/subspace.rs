use alloc::vec::Vec;

use super::{ExactError, ExactMatrix, FieldSpec, Scalar};

/// A subspace of `F^n`, stored as the RREF of a basis with zero rows dropped.
///
/// Since the RREF of a row space is unique, structural equality is subspace
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace::from_matrix(&ExactMatrix::identity(field, ambient))
    }

    /// The row space of `m`.
    pub fn from_matrix(m: &ExactMatrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let entries = r.entries()[..rank * m.cols()].to_vec();
        Subspace {
            ambient: m.cols(),
            basis: ExactMatrix::new(m.field(), rank, m.cols(), entries).expect("truncated rref keeps its shape"),
            pivots,
        }
    }

    /// Smallest subspace containing every vector.
    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self, ExactError> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        let m = ExactMatrix::from_rows(field, ambient, vectors)?;
        Ok(Subspace::from_matrix(&m))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// RREF basis matrix, one basis vector per row.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_iter().map(|r| r.to_vec()).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), ExactError> {
        if self.field() != other.field() {
            return Err(ExactError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_compatible(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        let da = self.dim();
        let db = other.dim();
        let mut entries = Vec::with_capacity(self.ambient * (da + db));
        for c in 0..self.ambient {
            for r in 0..da {
                entries.push(self.basis.get(r, c).clone());
            }
            for r in 0..db {
                entries.push(-other.basis.get(r, c));
            }
        }
        let stacked = ExactMatrix::new(field, self.ambient, da + db, entries)?;
        let kernel = stacked.kernel();
        let mut vectors = Vec::with_capacity(kernel.dim());
        for coeffs in kernel.basis.row_iter() {
            vectors.push(self.combine(&coeffs[..da]));
        }
        Subspace::span(field, self.ambient, &vectors)
    }

    /// `sum_i coeffs[i] * basis_i`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut v = alloc::vec![field.zero(); self.ambient];
        for (row, c) in self.basis.row_iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in v.iter_mut().zip(row) {
                if !x.is_zero() {
                    *slot = &*slot + &(c * x);
                }
            }
        }
        v
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, ExactError> {
        if v.len() != self.ambient {
            return Err(ExactError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field()) {
            return Err(ExactError::FieldMismatch {
                left: self.field(),
                right: bad.field(),
            });
        }
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.combine(&coeffs).as_slice() == v {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, ExactError> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, ExactError> {
        self.check_compatible(other)?;
        for row in self.basis.row_iter() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn spans() {
        assert_eq!(Subspace::span(q(), 3, &[v(&[1, 0, 0])]).unwrap().dim(), 1);
        assert!(Subspace::span(q(), 3, &[]).unwrap().is_zero());
        assert!(Subspace::span(q(), 3, &[v(&[1, 0])]).is_err());
    }

    #[test]
    fn lattice_operations() {
        let x = Subspace::span(q(), 2, &[v(&[1, 0])]).unwrap();
        let y = Subspace::span(q(), 2, &[v(&[0, 1])]).unwrap();
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(q(), 2));

        let plane = Subspace::span(q(), 2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let diag = Subspace::span(q(), 2, &[v(&[1, 1])]).unwrap();
        assert_eq!(plane.intersect(&diag).unwrap(), diag);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert!(diag.is_subspace_of(&plane).unwrap());
        assert!(!plane.is_subspace_of(&diag).unwrap());
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let s = Subspace::span(q(), 3, &[v(&[1, 2, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.coordinates(&v(&[2, 4, -1])).unwrap(), Some(v(&[2, -1])));
        assert_eq!(s.coordinates(&v(&[0, 1, 0])).unwrap(), None);
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::zero(q(), 2);
        let b = Subspace::zero(q(), 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.is_subspace_of(&b).is_err());
        assert!(a.contains(&vec![q().zero(); 3]).is_err());
    }
}
