use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{BracketEntry, LieAlgebra, LieError};
use crate::exactmath::FieldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeisenbergVariant {
    /// Basis `(x, a, b)` with `[x, a] = b`.
    Xab,
    /// Basis `(y, a, b)` with `[y, b] = a`.
    Yab,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardAlgebra {
    Abelian(usize),
    Heisenberg(HeisenbergVariant),
    Gl(usize),
    Sl2,
}

pub fn standard_algebra(name: StandardAlgebra, field: FieldSpec) -> Result<LieAlgebra, LieError> {
    Ok(match name {
        StandardAlgebra::Abelian(n) => abelian(field, n),
        StandardAlgebra::Heisenberg(v) => heisenberg(field, v),
        StandardAlgebra::Gl(n) => gl(field, n),
        StandardAlgebra::Sl2 => sl2(field)?,
    })
}

/// All brackets zero; basis labelled `e1, ..., en`.
pub fn abelian(field: FieldSpec, n: usize) -> LieAlgebra {
    LieAlgebra::from_brackets(field, n, &[])
        .expect("empty table")
        .with_labels((1..=n).map(|i| format!("e{i}")))
        .expect("label count")
}

pub fn heisenberg(field: FieldSpec, variant: HeisenbergVariant) -> LieAlgebra {
    let one = field.one();
    let (labels, entry) = match variant {
        HeisenbergVariant::Xab => (["x", "a", "b"], BracketEntry::new(0, 1, alloc::vec![(2, one)])),
        HeisenbergVariant::Yab => (["y", "a", "b"], BracketEntry::new(0, 2, alloc::vec![(1, one)])),
    };
    LieAlgebra::from_brackets(field, 3, &[entry])
        .expect("valid table")
        .with_labels(labels)
        .expect("label count")
}

/// Flat index of the matrix unit `e_{ij}` (1-based `i`, `j`) in `gl(n)`.
pub fn gl_index(n: usize, i: usize, j: usize) -> usize {
    n * (i - 1) + (j - 1)
}

/// `gl(n)` on the matrix units `e_ij` in row-major order, with
/// `[e_ij, e_kl] = δ_jk e_il - δ_li e_kj`.
pub fn gl(field: FieldSpec, n: usize) -> LieAlgebra {
    let dim = n * n;
    let mut entries = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut coeffs = Vec::new();
            if j == k {
                coeffs.push((i * n + l, field.one()));
            }
            if l == i {
                coeffs.push((k * n + j, -field.one()));
            }
            if !coeffs.is_empty() {
                entries.push(BracketEntry::new(a, b, coeffs));
            }
        }
    }
    let labels: Vec<String> = (0..dim)
        .map(|a| {
            if n <= 9 {
                format!("e{}{}", a / n + 1, a % n + 1)
            } else {
                format!("e{}_{}", a / n + 1, a % n + 1)
            }
        })
        .collect();
    LieAlgebra::from_brackets(field, dim, &entries)
        .expect("valid table")
        .with_labels(labels)
        .expect("label count")
}

/// `sl(2)` on `(e, h, f)`: `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2(field: FieldSpec) -> Result<LieAlgebra, LieError> {
    if field.characteristic() == 2 {
        return Err(LieError::CharacteristicTwo);
    }
    let one = field.one();
    let two = field.from_i64(2);
    // i < j form: [e, h] = -2e, [e, f] = h, [h, f] = -2f
    let entries = [
        BracketEntry::new(0, 1, alloc::vec![(0, -&two)]),
        BracketEntry::new(0, 2, alloc::vec![(1, one)]),
        BracketEntry::new(1, 2, alloc::vec![(2, -&two)]),
    ];
    LieAlgebra::from_brackets(field, 3, &entries)?.with_labels(["e", "h", "f"])
}
