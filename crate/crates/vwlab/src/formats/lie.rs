use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};
use vwlab_core::lie::{BracketEntry, LieAlgebra};
use vwlab_core::FieldSpec;

use super::matrix::parse_scalar;
use super::{schema, FormatError};

/// Larger tables are refused: the dense constant table has `dim^3` entries.
const MAX_DIM: usize = 64;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    field: String,
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketJson {
    i: usize,
    j: usize,
    coeffs: Vec<CoeffJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    k: usize,
    c: Value,
}

/// Parses `{"field", "dim", "labels"?, "brackets": [{"i", "j", "coeffs": [{"k", "c"}]}]}`.
/// Indices are 0-based, only `i < j` entries are allowed and omitted pairs
/// are zero. The Lie axioms are not checked here.
pub fn parse_lie(text: &str) -> Result<LieAlgebra, FormatError> {
    let file: LieFile = serde_json::from_str(text)?;
    let field: FieldSpec = file
        .field
        .parse()
        .map_err(|e: vwlab_core::ExactError| schema("field", e.to_string()))?;
    let dim = file.dim;
    if dim > MAX_DIM {
        return Err(schema("dim", format!("{dim} exceeds the supported maximum {MAX_DIM}")));
    }
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(file.brackets.len());
    for (n, b) in file.brackets.iter().enumerate() {
        let path = format!("brackets[{n}]");
        if b.j >= dim {
            return Err(schema(
                format!("{path}.j"),
                format!("index {} out of range for dim {dim}", b.j),
            ));
        }
        if b.i >= b.j {
            return Err(schema(
                format!("{path}.i"),
                format!("only entries with i < j are allowed, found i = {}, j = {}", b.i, b.j),
            ));
        }
        if !seen.insert((b.i, b.j)) {
            return Err(schema(path, format!("bracket ({}, {}) given twice", b.i, b.j)));
        }
        let mut ks = BTreeSet::new();
        let mut coeffs = Vec::with_capacity(b.coeffs.len());
        for (m, c) in b.coeffs.iter().enumerate() {
            let cpath = format!("{path}.coeffs[{m}]");
            if c.k >= dim {
                return Err(schema(
                    format!("{cpath}.k"),
                    format!("index {} out of range for dim {dim}", c.k),
                ));
            }
            if !ks.insert(c.k) {
                return Err(schema(format!("{cpath}.k"), format!("coefficient {} given twice", c.k)));
            }
            coeffs.push((c.k, parse_scalar(field, &c.c, &format!("{cpath}.c"))?));
        }
        entries.push(BracketEntry::new(b.i, b.j, coeffs));
    }
    let algebra = LieAlgebra::from_brackets(field, dim, &entries).map_err(|e| schema("brackets", e.to_string()))?;
    match file.labels {
        None => Ok(algebra),
        Some(labels) => {
            if labels.len() != dim {
                return Err(schema(
                    "labels",
                    format!("expected {dim} labels, found {}", labels.len()),
                ));
            }
            let mut unique = BTreeSet::new();
            for (n, l) in labels.iter().enumerate() {
                if l.is_empty() || !unique.insert(l.as_str()) {
                    return Err(schema(format!("labels[{n}]"), "labels must be nonempty and distinct"));
                }
            }
            algebra.with_labels(labels).map_err(|e| schema("labels", e.to_string()))
        }
    }
}

/// Serializes the nonzero `i < j` brackets, one entry per line.
pub fn lie_to_string(l: &LieAlgebra) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"field\": {},", json!(l.field().to_string()));
    let _ = writeln!(out, "  \"dim\": {},", l.dim());
    let _ = writeln!(out, "  \"labels\": {},", json!(l.labels()));
    let entries = l.nonzero_brackets();
    if entries.is_empty() {
        out.push_str("  \"brackets\": []\n}\n");
        return out;
    }
    out.push_str("  \"brackets\": [\n");
    for (n, e) in entries.iter().enumerate() {
        let coeffs: Vec<Value> = e
            .coeffs
            .iter()
            .map(|(k, c)| json!({"k": k, "c": c.to_string()}))
            .collect();
        let line = json!({"i": e.i, "j": e.j, "coeffs": coeffs});
        let sep = if n + 1 == entries.len() { "" } else { "," };
        let _ = writeln!(out, "    {line}{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use vwlab_core::lie::{heisenberg, HeisenbergVariant};

    const HEIS: &str = r#"{"field": "Q", "dim": 3, "labels": ["x", "a", "b"],
        "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "c": "1"}]}]}"#;

    #[test]
    fn parses_heisenberg() {
        let l = parse_lie(HEIS).unwrap();
        assert_eq!(l, heisenberg(FieldSpec::rationals(), HeisenbergVariant::Xab));
    }

    #[test]
    fn round_trips() {
        let l = parse_lie(HEIS).unwrap();
        assert_eq!(parse_lie(&lie_to_string(&l)).unwrap(), l);
        let empty = vwlab_core::lie::abelian(FieldSpec::prime(7).unwrap(), 2);
        assert_eq!(parse_lie(&lie_to_string(&empty)).unwrap(), empty);
    }

    fn err(text: &str) -> String {
        parse_lie(text).unwrap_err().to_string()
    }

    #[test]
    fn rejects_lower_triangle_entries() {
        let e = err(r#"{"field": "Q", "dim": 3, "brackets": [{"i": 1, "j": 0, "coeffs": []}]}"#);
        assert_eq!(
            e,
            "brackets[0].i: only entries with i < j are allowed, found i = 1, j = 0"
        );
        let e = err(r#"{"field": "Q", "dim": 3, "brackets": [{"i": 1, "j": 1, "coeffs": []}]}"#);
        assert!(e.starts_with("brackets[0].i:"), "{e}");
    }

    #[test]
    fn rejects_out_of_range_indices() {
        let e = err(r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 2, "coeffs": []}]}"#);
        assert_eq!(e, "brackets[0].j: index 2 out of range for dim 2");
        let e = err(r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 5, "c": 1}]}]}"#);
        assert_eq!(e, "brackets[0].coeffs[0].k: index 5 out of range for dim 2");
    }

    #[test]
    fn rejects_bad_fields_and_labels() {
        assert_eq!(
            err(r#"{"field": "GF(4)", "dim": 1}"#),
            "field: modulus 4 is not a prime"
        );
        let e = err(r#"{"field": "Q", "dim": 2, "labels": ["a"]}"#);
        assert_eq!(e, "labels: expected 2 labels, found 1");
        let e = err(r#"{"field": "Q", "dim": 2, "labels": ["a", "a"]}"#);
        assert!(e.starts_with("labels[1]:"), "{e}");
    }

    #[test]
    fn reports_unknown_keys_with_position() {
        let e = err("{\"field\": \"Q\",\n \"dim\": 1,\n \"bracket\": []}");
        assert!(e.contains("unknown field `bracket`") && e.contains("line 3"), "{e}");
    }
}
