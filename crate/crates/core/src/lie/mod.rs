//! Finite-dimensional Lie algebras given by structure constants.
//!
//! An algebra of dimension `n` stores the full table `c[i][j][k]` with
//! `[x_i, x_j] = sum_k c[i][j][k] x_k`. Vectors are coordinate slices in
//! that basis; subspaces are [`Subspace`](crate::Subspace)s of `F^n`.

mod adjoint;
mod algebra;
mod derivations;
mod hom;
mod semidirect;
mod series;
mod standard;
mod subspaces;

pub use adjoint::{ad_restricted, adjoint_on_ideal, AdjointImage};
pub use algebra::{BracketEntry, LieAlgebra, LieViolation};
pub use derivations::{derivations, is_derivation, DerivationAlgebra};
pub use hom::{check_hom, is_isomorphic_via, verify_split_extension, HomKind, LinearMap};
pub use semidirect::{semidirect, semidirect_by_action, SemidirectProduct};
pub use series::{derived_series, lower_central_series, SeriesClass, SeriesKind, SeriesReport};
pub use standard::{abelian, gl, gl_index, heisenberg, sl2, standard_algebra, HeisenbergVariant, StandardAlgebra};

use alloc::string::String;

use crate::exactmath::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("bracket entry ({i}, {j}) must satisfy i < j < {dim}")]
    BracketIndex { i: usize, j: usize, dim: usize },
    #[error("coefficient index {k} out of range for dimension {dim}")]
    CoefficientIndex { k: usize, dim: usize },
    #[error("bracket ({i}, {j}) given more than once")]
    DuplicateBracket { i: usize, j: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("not a Lie algebra: {0}")]
    Invalid(LieViolation),
    #[error("{0} is not a Lie algebra homomorphism")]
    NotHomomorphism(String),
    #[error("matrix {0} is not a derivation")]
    NotDerivation(usize),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("sl(2) requires characteristic different from 2")]
    CharacteristicTwo,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
