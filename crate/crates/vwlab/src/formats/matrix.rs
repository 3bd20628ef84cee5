use serde_json::Value;
use vwlab_core::{ExactMatrix, FieldSpec, Scalar};

use super::{schema, FormatError};

/// Canonical text form of a scalar, as a JSON string.
pub fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

/// Array of rows, each an array of scalar strings.
pub fn matrix_to_value(m: &ExactMatrix) -> Value {
    Value::Array(m.row_iter().map(vector_value).collect())
}

/// Scalars may be written as strings (`"-3/4"`) or JSON integers.
pub(crate) fn parse_scalar(field: FieldSpec, v: &Value, path: &str) -> Result<Scalar, FormatError> {
    match v {
        Value::String(s) => field.parse_scalar(s).map_err(|e| schema(path, e.to_string())),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => Err(schema(
                path,
                format!("{n} is not an integer; write fractions as strings"),
            )),
        },
        other => Err(schema(path, format!("expected a scalar, found {}", kind(other)))),
    }
}

pub(crate) fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn parse_vector_at(field: FieldSpec, v: &Value, len: Option<usize>, path: &str) -> Result<Vec<Scalar>, FormatError> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(path, format!("expected an array, found {}", kind(v))))?;
    if let Some(len) = len {
        if items.len() != len {
            return Err(schema(path, format!("expected {len} entries, found {}", items.len())));
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_scalar(field, x, &format!("{path}[{i}]")))
        .collect()
}

pub(crate) fn parse_matrix_at(
    field: FieldSpec,
    v: &Value,
    shape: Option<(usize, usize)>,
    path: &str,
) -> Result<ExactMatrix, FormatError> {
    let rows = v
        .as_array()
        .ok_or_else(|| schema(path, format!("expected an array of rows, found {}", kind(v))))?;
    if rows.is_empty() {
        return Err(schema(path, "matrix has no rows"));
    }
    if let Some((r, _)) = shape {
        if rows.len() != r {
            return Err(schema(path, format!("expected {r} rows, found {}", rows.len())));
        }
    }
    let width = match shape {
        Some((_, c)) => c,
        None => rows[0].as_array().map_or(0, Vec::len),
    };
    let parsed: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| parse_vector_at(field, row, Some(width), &format!("{path}[{i}]")))
        .collect::<Result<_, _>>()?;
    ExactMatrix::from_rows(field, width, &parsed).map_err(|e| schema(path, e.to_string()))
}

/// A single matrix: `[["1", "0"], ["0", "1"]]`.
pub fn parse_matrix(text: &str, field: FieldSpec, shape: Option<(usize, usize)>) -> Result<ExactMatrix, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    parse_matrix_at(field, &v, shape, "$")
}

/// An array of square `n x n` matrices.
pub fn parse_matrix_list(text: &str, field: FieldSpec, n: usize) -> Result<Vec<ExactMatrix>, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let items = v
        .as_array()
        .ok_or_else(|| schema("$", format!("expected an array of matrices, found {}", kind(&v))))?;
    items
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix_at(field, m, Some((n, n)), &format!("$[{i}]")))
        .collect()
}

/// An array of coordinate vectors of length `dim`.
pub fn parse_vectors(text: &str, field: FieldSpec, dim: usize) -> Result<Vec<Vec<Scalar>>, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let items = v
        .as_array()
        .ok_or_else(|| schema("$", format!("expected an array of vectors, found {}", kind(&v))))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vector_at(field, x, Some(dim), &format!("$[{i}]")))
        .collect()
}
