use alloc::vec;
use alloc::vec::Vec;

use super::{LieAlgebra, LieError};
use crate::exactmath::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// How a series ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesClass {
    /// The term with this index (the first term being index 0) is zero and
    /// the previous one is not: `L` is `k`-nilpotent (`k`-solvable).
    /// The zero algebra reports 0.
    Terminates(usize),
    /// The series stabilized at a nonzero term.
    Stabilizes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Terms from the full algebra down to the first zero or repeated term;
    /// a repeated term is not stored twice.
    pub terms: Vec<Subspace>,
    pub class: SeriesClass,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Nilpotency class or derived length, when finite.
    pub fn length(&self) -> Option<usize> {
        match self.class {
            SeriesClass::Terminates(k) => Some(k),
            SeriesClass::Stabilizes => None,
        }
    }
}

fn run_series(
    l: &LieAlgebra,
    kind: SeriesKind,
    step: impl Fn(&Subspace) -> Result<Subspace, LieError>,
) -> Result<SeriesReport, LieError> {
    l.require_valid()?;
    let mut terms = vec![l.full_space()];
    loop {
        let last = terms.last().expect("series is never empty");
        if last.is_zero() {
            let class = SeriesClass::Terminates(terms.len() - 1);
            return Ok(SeriesReport { kind, terms, class });
        }
        let next = step(last)?;
        if &next == last {
            return Ok(SeriesReport {
                kind,
                terms,
                class: SeriesClass::Stabilizes,
            });
        }
        terms.push(next);
    }
}

/// `L^0 = L`, `L^k = [L, L^{k-1}]`.
pub fn lower_central_series(l: &LieAlgebra) -> Result<SeriesReport, LieError> {
    let full = l.full_space();
    run_series(l, SeriesKind::LowerCentral, |t| l.product_subspace(&full, t))
}

/// `L^(0) = L`, `L^(n) = [L^(n-1), L^(n-1)]`.
pub fn derived_series(l: &LieAlgebra) -> Result<SeriesReport, LieError> {
    run_series(l, SeriesKind::Derived, |t| l.product_subspace(t, t))
}
