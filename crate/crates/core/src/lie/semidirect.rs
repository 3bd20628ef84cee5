use alloc::string::String;
use alloc::vec::Vec;

use super::{check_hom, is_derivation, DerivationAlgebra, HomKind, LieAlgebra, LieError, LinearMap};
use crate::exactmath::{ExactError, ExactMatrix};

/// `B ⋉ X` on the basis `(B-basis, X-basis)`, with the maps of the split
/// extension `X -> B ⋉ X <-> B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectProduct {
    pub algebra: LieAlgebra,
    acting: LieAlgebra,
    kernel: LieAlgebra,
}

impl SemidirectProduct {
    pub fn acting(&self) -> &LieAlgebra {
        &self.acting
    }

    pub fn kernel(&self) -> &LieAlgebra {
        &self.kernel
    }

    /// `X -> B ⋉ X`, `x ↦ (0, x)`.
    pub fn kernel_inclusion(&self) -> LinearMap {
        let (m, n) = (self.acting.dim(), self.kernel.dim());
        let field = self.algebra.field();
        let mut mat = ExactMatrix::zero(field, m + n, n);
        for j in 0..n {
            mat.set(m + j, j, field.one());
        }
        LinearMap::new(self.kernel.clone(), self.algebra.clone(), mat).expect("shape")
    }

    /// `B ⋉ X -> B`, `(b, x) ↦ b`.
    pub fn projection(&self) -> LinearMap {
        let (m, n) = (self.acting.dim(), self.kernel.dim());
        let field = self.algebra.field();
        let mut mat = ExactMatrix::zero(field, m, m + n);
        for i in 0..m {
            mat.set(i, i, field.one());
        }
        LinearMap::new(self.algebra.clone(), self.acting.clone(), mat).expect("shape")
    }

    /// `B -> B ⋉ X`, `b ↦ (b, 0)`.
    pub fn section(&self) -> LinearMap {
        let (m, n) = (self.acting.dim(), self.kernel.dim());
        let field = self.algebra.field();
        let mut mat = ExactMatrix::zero(field, m + n, m);
        for i in 0..m {
            mat.set(i, i, field.one());
        }
        LinearMap::new(self.acting.clone(), self.algebra.clone(), mat).expect("shape")
    }
}

/// Semidirect product for an action given as a Lie homomorphism `psi` from
/// `B` into the derivation algebra of `X`.
pub fn semidirect(
    b: &LieAlgebra,
    x: &LieAlgebra,
    der: &DerivationAlgebra,
    psi: &LinearMap,
) -> Result<SemidirectProduct, LieError> {
    if psi.domain().dim() != b.dim() {
        return Err(LieError::DimensionMismatch {
            expected: b.dim(),
            found: psi.domain().dim(),
        });
    }
    if !psi.codomain().same_table(&der.algebra) || der.base_dim() != x.dim() {
        return Err(LieError::DimensionMismatch {
            expected: der.algebra.dim(),
            found: psi.codomain().dim(),
        });
    }
    if check_hom(psi) == HomKind::NotHom {
        return Err(LieError::NotHomomorphism(String::from("psi")));
    }
    let actions: Vec<ExactMatrix> = (0..b.dim())
        .map(|i| der.realize(&psi.matrix().column_vec(i)))
        .collect::<Result<_, _>>()?;
    semidirect_by_action(b, x, &actions)
}

/// Semidirect product for an action given by one `dim X` square matrix per
/// basis vector of `B`. Each matrix must be a derivation of `X`, and
/// `b_i ↦ actions[i]` must preserve brackets.
///
/// `[(b, x), (b', x')] = ([b, b'], ψ(b) x' - ψ(b') x + [x, x'])`.
pub fn semidirect_by_action(
    b: &LieAlgebra,
    x: &LieAlgebra,
    actions: &[ExactMatrix],
) -> Result<SemidirectProduct, LieError> {
    if b.field() != x.field() {
        return Err(ExactError::FieldMismatch {
            left: b.field(),
            right: x.field(),
        }
        .into());
    }
    if actions.len() != b.dim() {
        return Err(LieError::DimensionMismatch {
            expected: b.dim(),
            found: actions.len(),
        });
    }
    b.require_valid()?;
    x.require_valid()?;
    for (i, a) in actions.iter().enumerate() {
        if !is_derivation(x, a)? {
            return Err(LieError::NotDerivation(i));
        }
    }
    let field = b.field();
    let (m, n) = (b.dim(), x.dim());
    for i in 0..m {
        for j in i + 1..m {
            let mut lhs = ExactMatrix::zero(field, n, n);
            for (k, c) in b.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&actions[k].scale(c)?)?;
                }
            }
            if lhs != actions[i].commutator(&actions[j])? {
                return Err(LieError::NotHomomorphism(String::from("action")));
            }
        }
    }

    let dim = m + n;
    let mut constants = alloc::vec![field.zero(); dim * dim * dim];
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                constants[idx(i, j, k)] = b.structure_constant(i, j, k).clone();
            }
        }
        // [b_i, x_j] = ψ(b_i) x_j
        for j in 0..n {
            for k in 0..n {
                let c = actions[i].get(k, j);
                constants[idx(i, m + j, m + k)] = c.clone();
                constants[idx(m + j, i, m + k)] = -c;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                constants[idx(m + i, m + j, m + k)] = x.structure_constant(i, j, k).clone();
            }
        }
    }
    let labels: Vec<String> = b.labels().iter().chain(x.labels()).cloned().collect();
    let algebra = LieAlgebra::from_constants(field, dim, constants)?.with_labels(labels)?;
    algebra.require_valid()?;
    Ok(SemidirectProduct {
        algebra,
        acting: b.clone(),
        kernel: x.clone(),
    })
}
