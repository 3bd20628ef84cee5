//! Exact scalar arithmetic and dense linear algebra over `Q` and `GF(p)`.

mod field;
mod matrix;
mod scalar;
mod subspace;

pub use field::FieldSpec;
pub use matrix::ExactMatrix;
pub use scalar::{scalar_arith, Scalar, ScalarOp};
pub use subspace::Subspace;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse {what} from {text:?}")]
    Parse { what: &'static str, text: String },
}
