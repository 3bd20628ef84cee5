//! Exact computational algebra kernels.
//!
//! Three layers, each depending only on the ones above it:
//!
//! - [`exactmath`]: scalars over `Q` and `GF(p)`, dense exact matrices, row
//!   reduction, kernels and the subspace lattice.
//! - [`lie`]: finite-dimensional Lie algebras given by structure constants,
//!   lower central and derived series, closures, derivation algebras,
//!   semidirect products and homomorphism checks.
//! - [`group`]: finite matrix groups over `GF(p)`, closure enumeration,
//!   commutator subgroups, series and vector-space semidirect products.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod exactmath;
pub mod group;
pub mod lie;

pub use exactmath::{ExactError, ExactMatrix, FieldSpec, Scalar, ScalarOp, Subspace};
