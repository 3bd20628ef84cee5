use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::LieError;
use crate::exactmath::{ExactError, FieldSpec, Scalar};

/// One `i < j` entry of a bracket table: `[x_i, x_j] = sum (k, c) c x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, Scalar)>,
}

impl BracketEntry {
    pub fn new(i: usize, j: usize, coeffs: Vec<(usize, Scalar)>) -> Self {
        BracketEntry { i, j, coeffs }
    }
}

/// First failure found by [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieViolation {
    /// `[x_i, x_i]` has a nonzero `x_k` coefficient.
    NotAlternating { i: usize, k: usize },
    /// `c[i][j][k] != -c[j][i][k]`.
    NotAntisymmetric { i: usize, j: usize, k: usize },
    /// `[[x_i, x_j], x_l] + [[x_j, x_l], x_i] + [[x_l, x_i], x_j] != 0`.
    Jacobi { i: usize, j: usize, l: usize },
}

impl fmt::Display for LieViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieViolation::NotAlternating { i, k } => {
                write!(f, "[x{i}, x{i}] has nonzero x{k} coefficient")
            }
            LieViolation::NotAntisymmetric { i, j, k } => {
                write!(f, "antisymmetry fails at (i, j, k) = ({i}, {j}, {k})")
            }
            LieViolation::Jacobi { i, j, l } => {
                write!(f, "Jacobi identity fails at basis triple ({i}, {j}, {l})")
            }
        }
    }
}

/// A Lie algebra over an exact field, given by its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    constants: Vec<Scalar>,
    labels: Vec<String>,
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("v{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from its `i < j` bracket entries; the remaining
    /// entries follow by antisymmetry. Omitted pairs bracket to zero.
    pub fn from_brackets(field: FieldSpec, dim: usize, brackets: &[BracketEntry]) -> Result<Self, LieError> {
        let mut constants = vec![field.zero(); dim * dim * dim];
        let mut seen = vec![false; dim * dim];
        for entry in brackets {
            let (i, j) = (entry.i, entry.j);
            if i >= j || j >= dim {
                return Err(LieError::BracketIndex { i, j, dim });
            }
            if core::mem::replace(&mut seen[i * dim + j], true) {
                return Err(LieError::DuplicateBracket { i, j });
            }
            for (k, c) in &entry.coeffs {
                if *k >= dim {
                    return Err(LieError::CoefficientIndex { k: *k, dim });
                }
                if c.field() != field {
                    return Err(ExactError::FieldMismatch {
                        left: field,
                        right: c.field(),
                    }
                    .into());
                }
                let ij = (i * dim + j) * dim + k;
                let ji = (j * dim + i) * dim + k;
                constants[ij] = &constants[ij] + c;
                constants[ji] = -&constants[ij];
            }
        }
        Ok(LieAlgebra {
            field,
            dim,
            constants,
            labels: default_labels(dim),
        })
    }

    /// Builds an algebra from a full `dim^3` table without enforcing
    /// antisymmetry. Use [`validate`](Self::validate) to check the result.
    pub fn from_constants(field: FieldSpec, dim: usize, constants: Vec<Scalar>) -> Result<Self, LieError> {
        if constants.len() != dim * dim * dim {
            return Err(LieError::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        if let Some(bad) = constants.iter().find(|c| c.field() != field) {
            return Err(ExactError::FieldMismatch {
                left: field,
                right: bad.field(),
            }
            .into());
        }
        Ok(LieAlgebra {
            field,
            dim,
            constants,
            labels: default_labels(dim),
        })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self, LieError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.dim {
            return Err(LieError::LabelCount {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    /// The basis vector `x_i`.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    /// Same field and structure constants, labels ignored.
    pub fn same_table(&self, other: &LieAlgebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.constants == other.constants
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field) {
            return Err(ExactError::FieldMismatch {
                left: self.field,
                right: bad.field(),
            }
            .into());
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let row = self.bracket_basis(i, j);
                if row.iter().all(Scalar::is_zero) {
                    continue;
                }
                let w = ui * vj;
                for (slot, c) in out.iter_mut().zip(row) {
                    if !c.is_zero() {
                        *slot = &*slot + &(&w * c);
                    }
                }
            }
        }
        // Diagonal terms only matter for tables that fail alternation.
        for (i, (ui, vi)) in u.iter().zip(v).enumerate() {
            if ui.is_zero() || vi.is_zero() {
                continue;
            }
            let row = self.bracket_basis(i, i);
            if row.iter().all(Scalar::is_zero) {
                continue;
            }
            let w = ui * vi;
            for (slot, c) in out.iter_mut().zip(row) {
                *slot = &*slot + &(&w * c);
            }
        }
        out
    }

    /// Checks alternation, antisymmetry and the Jacobi identity on every
    /// basis triple, reporting the first violation.
    pub fn validate(&self) -> Result<(), LieViolation> {
        let n = self.dim;
        for i in 0..n {
            for k in 0..n {
                if !self.structure_constant(i, i, k).is_zero() {
                    return Err(LieViolation::NotAlternating { i, k });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    if !(a + b).is_zero() {
                        return Err(LieViolation::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let xi = self.basis_vector(i);
                    let xj = self.basis_vector(j);
                    let xl = self.basis_vector(l);
                    let t1 = self.bracket_unchecked(self.bracket_basis(i, j), &xl);
                    let t2 = self.bracket_unchecked(self.bracket_basis(j, l), &xi);
                    let t3 = self.bracket_unchecked(self.bracket_basis(l, i), &xj);
                    let zero = t1.iter().zip(&t2).zip(&t3).all(|((a, b), c)| (&(a + b) + c).is_zero());
                    if !zero {
                        return Err(LieViolation::Jacobi { i, j, l });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn require_valid(&self) -> Result<(), LieError> {
        self.validate().map_err(LieError::Invalid)
    }

    /// Nonzero `i < j` brackets of the table.
    pub fn nonzero_brackets(&self) -> Vec<BracketEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let coeffs: Vec<(usize, Scalar)> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !coeffs.is_empty() {
                    out.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        out
    }

    /// Renders a vector using the basis labels, e.g. `-e2` or `2*a + b`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.labels.get(k).map_or("?", String::as_str);
            let negative = c.is_negative();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{mag}*{label}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Renders the nonzero `i < j` brackets as `[x, a] = b` lines.
    pub fn format_table(&self) -> Vec<String> {
        self.nonzero_brackets()
            .iter()
            .map(|e| {
                format!(
                    "[{}, {}] = {}",
                    self.labels[e.i],
                    self.labels[e.j],
                    self.format_vector(self.bracket_basis(e.i, e.j))
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::standard::{heisenberg, HeisenbergVariant};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn heisenberg_is_valid() {
        let h = heisenberg(q(), HeisenbergVariant::Xab);
        assert!(h.is_valid());
        assert_eq!(h.format_table(), vec!["[x, a] = b"]);
    }

    #[test]
    fn broken_antisymmetry_is_detected() {
        let h = heisenberg(q(), HeisenbergVariant::Xab);
        let mut c = h.constants().to_vec();
        // c[x][a][b] = 2 while c[a][x][b] stays -1
        c[5] = q().from_i64(2);
        let broken = LieAlgebra::from_constants(q(), 3, c).unwrap();
        assert_eq!(
            broken.validate(),
            Err(LieViolation::NotAntisymmetric { i: 0, j: 1, k: 2 })
        );
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        // [v1, v2] = v3, [v2, v3] = v2
        let f = q();
        let l = LieAlgebra::from_brackets(
            f,
            3,
            &[
                BracketEntry::new(0, 1, vec![(2, f.one())]),
                BracketEntry::new(1, 2, vec![(1, f.one())]),
            ],
        )
        .unwrap();
        assert_eq!(l.validate(), Err(LieViolation::Jacobi { i: 0, j: 1, l: 2 }));
    }

    #[test]
    fn loader_rejects_bad_entries() {
        let f = q();
        let bad = |i, j| LieAlgebra::from_brackets(f, 3, &[BracketEntry::new(i, j, vec![])]);
        assert!(matches!(bad(1, 0), Err(LieError::BracketIndex { .. })));
        assert!(matches!(bad(1, 1), Err(LieError::BracketIndex { .. })));
        assert!(matches!(bad(0, 3), Err(LieError::BracketIndex { .. })));
        let coeff = LieAlgebra::from_brackets(f, 2, &[BracketEntry::new(0, 1, vec![(2, f.one())])]);
        assert!(matches!(coeff, Err(LieError::CoefficientIndex { k: 2, dim: 2 })));
        let dup = LieAlgebra::from_brackets(
            f,
            2,
            &[BracketEntry::new(0, 1, vec![]), BracketEntry::new(0, 1, vec![])],
        );
        assert!(matches!(dup, Err(LieError::DuplicateBracket { i: 0, j: 1 })));
    }

    #[test]
    fn bracket_is_alternating_and_checks_lengths() {
        let h = heisenberg(q(), HeisenbergVariant::Xab);
        let v: Vec<Scalar> = [3, -2, 5].iter().map(|&x| q().from_i64(x)).collect();
        assert!(h.bracket(&v, &v).unwrap().iter().all(Scalar::is_zero));
        assert!(h.bracket(&v[..2], &v).is_err());
    }

    #[test]
    fn vector_formatting() {
        let h = heisenberg(q(), HeisenbergVariant::Xab);
        let v = [q().from_i64(2), q().from_i64(-1), q().zero()];
        assert_eq!(h.format_vector(&v), "2*x - a");
        assert_eq!(h.format_vector(&h.zero_vector()), "0");
    }
}
