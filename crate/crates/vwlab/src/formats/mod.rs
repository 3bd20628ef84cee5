//! Text formats: Lie algebra tables, matrices and vectors as JSON, matrix
//! group generator files, and relation lists.
//!
//! Parsers take the file contents; reading from disk is left to callers.
//! Errors carry a line/column (JSON syntax) or a field path such as
//! `brackets[2].coeffs[0].c` (schema violations).

mod group;
mod lie;
mod matrix;

pub use group::{group_to_string, parse_group, parse_relations, RelationLine};
pub use lie::{lie_to_string, parse_lie};
pub use matrix::{matrix_to_value, parse_matrix, parse_matrix_list, parse_vectors, scalar_value, vector_value};

use vwlab_core::group::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// Malformed JSON or a value of the wrong JSON type.
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Schema { field: String, message: String },
    #[error("line {line}: {source}")]
    Relation {
        line: usize,
        #[source]
        source: GroupError,
    },
    /// The file parsed but describes an invalid group (bad modulus,
    /// singular generator, ...).
    #[error(transparent)]
    Group(GroupError),
}

pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema {
        field: field.into(),
        message: message.into(),
    }
}
