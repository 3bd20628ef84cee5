use alloc::vec::Vec;

use super::{LieAlgebra, LieError};
use crate::exactmath::{ExactError, Scalar, Subspace};

impl LieAlgebra {
    fn check_subspace(&self, s: &Subspace) -> Result<(), LieError> {
        if s.ambient() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        if s.field() != self.field() {
            return Err(ExactError::FieldMismatch {
                left: self.field(),
                right: s.field(),
            }
            .into());
        }
        Ok(())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    pub fn span(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace, LieError> {
        for v in vectors {
            self.check_vector(v)?;
        }
        Ok(Subspace::span(self.field(), self.dim(), vectors)?)
    }

    /// `[A, B]`: the span of all brackets of basis vectors of `A` and `B`.
    pub fn product_subspace(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, LieError> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for u in a.basis().row_iter() {
            for v in b.basis().row_iter() {
                let w = self.bracket_unchecked(u, v);
                if w.iter().any(|c| !c.is_zero()) {
                    vectors.push(w);
                }
            }
        }
        Ok(Subspace::span(self.field(), self.dim(), &vectors)?)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, LieError> {
        Ok(self.product_subspace(s, s)?.is_subspace_of(s)?)
    }

    /// `[L, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, LieError> {
        Ok(self.product_subspace(&self.full_space(), s)?.is_subspace_of(s)?)
    }

    /// Least subalgebra containing `vectors`.
    pub fn subalgebra_generated(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace, LieError> {
        let mut s = self.span(vectors)?;
        loop {
            let next = s.sum(&self.product_subspace(&s, &s)?)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Least ideal containing `vectors`.
    pub fn ideal_generated(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace, LieError> {
        let full = self.full_space();
        let mut s = self.span(vectors)?;
        loop {
            let next = s.sum(&self.product_subspace(&full, &s)?)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
    }

    /// The subalgebra `S` as an algebra in its own right, on the RREF basis
    /// of `S`. Basis vectors that are plain basis vectors of `self` keep
    /// their label; others are rendered as combinations.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        self.check_subspace(s)?;
        let d = s.dim();
        let rows = s.basis_vectors();
        let mut constants = Vec::with_capacity(d * d * d);
        for u in &rows {
            for v in &rows {
                let w = self.bracket_unchecked(u, v);
                let coords = s.coordinates(&w)?.ok_or(LieError::NotSubalgebra)?;
                constants.extend(coords);
            }
        }
        let labels: Vec<_> = rows.iter().map(|r| self.format_vector(r)).collect();
        LieAlgebra::from_constants(self.field(), d, constants)?.with_labels(labels)
    }
}
