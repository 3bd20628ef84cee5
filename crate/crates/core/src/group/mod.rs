//! Finite matrix groups over `GF(p)`.
//!
//! Groups are given by invertible generator matrices and realized by
//! breadth-first closure. Commutators follow `[g, h] = g⁻¹h⁻¹gh`.

mod element;
mod enumerate;
mod relation;
mod semidirect;
mod series;

pub use element::{commutator, element_order, CommutatorConvention, GroupElement};
pub use enumerate::{group_exponent, ElementSet, MatrixGroup, Subgroup, DEFAULT_CAP};
pub use relation::{evaluate_relation, RelationWord};
pub use semidirect::{translation, vector_semidirect};
pub use series::{
    brute_force_commutator_subgroup, commutator_subgroup, derived_series_grp, lower_central_series_grp, normal_closure,
    GroupSeries,
};

use alloc::string::String;

use crate::exactmath::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("generator {0:?} is not invertible")]
    NotInvertible(String),
    #[error("expected a {expected}x{expected} matrix, found {found} entries")]
    Shape { expected: usize, found: usize },
    #[error("residue {value} out of range for GF({p})")]
    ResidueOutOfRange { value: u64, p: u32 },
    #[error("enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("enumeration cap must be at least 1")]
    ZeroCap,
    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate generator label {0:?}")]
    DuplicateLabel(String),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("elements of different groups: GF({0}) {1}x{1} vs GF({2}) {3}x{3}")]
    Mismatch(u32, usize, u32, usize),
    #[error("relation parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}
