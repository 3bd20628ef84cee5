use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Map, Value};
use vwlab_core::group::{GroupElement, MatrixGroup, RelationWord};

use super::matrix::kind;
use super::{schema, FormatError};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    p: u64,
    n: usize,
    generators: Map<String, Value>,
}

/// Parses `{"p": 5, "n": 3, "generators": {"x": [[...]], ...}}` with integer
/// entries in `[0, p)`. Generator order follows the file.
pub fn parse_group(text: &str) -> Result<MatrixGroup, FormatError> {
    let file: GroupFile = serde_json::from_str(text)?;
    if file.p > u64::from(u32::MAX) {
        return Err(schema("p", format!("{} is too large", file.p)));
    }
    if file.n == 0 {
        return Err(schema("n", "matrices must be at least 1x1"));
    }
    let p = file.p;
    let n = file.n;
    let mut gens = Vec::with_capacity(file.generators.len());
    for (label, value) in &file.generators {
        let path = format!("generators.{label}");
        let rows = value
            .as_array()
            .ok_or_else(|| schema(&path, format!("expected an array of rows, found {}", kind(value))))?;
        if rows.len() != n {
            return Err(schema(&path, format!("expected {n} rows, found {}", rows.len())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let rpath = format!("{path}[{r}]");
            let row = row
                .as_array()
                .ok_or_else(|| schema(&rpath, format!("expected an array, found {}", kind(row))))?;
            if row.len() != n {
                return Err(schema(&rpath, format!("expected {n} entries, found {}", row.len())));
            }
            for (c, x) in row.iter().enumerate() {
                match x.as_u64() {
                    Some(v) if v < p => entries.push(v as u32),
                    _ => {
                        return Err(schema(
                            format!("{rpath}[{c}]"),
                            format!("expected an integer in [0, {p}), found {x}"),
                        ))
                    }
                }
            }
        }
        let g = GroupElement::new(p as u32, n, entries).map_err(FormatError::Group)?;
        gens.push((label.clone(), g));
    }
    MatrixGroup::new(p as u32, n, gens).map_err(FormatError::Group)
}

/// Serializes a generator file with one matrix row per line.
pub fn group_to_string(g: &MatrixGroup) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"p\": {},", g.p());
    let _ = writeln!(out, "  \"n\": {},", g.n());
    out.push_str("  \"generators\": {");
    let n = g.n();
    for (i, (label, e)) in g.labels().iter().zip(g.generators()).enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let _ = writeln!(out, "    {}: [", json!(label));
        for r in 0..n {
            let row = &e.entries()[r * n..(r + 1) * n];
            let sep = if r + 1 == n { "" } else { "," };
            let _ = writeln!(out, "      {}{sep}", json!(row));
        }
        out.push_str("    ]");
    }
    out.push_str(if g.labels().is_empty() { "}\n}\n" } else { "\n  }\n}\n" });
    out
}

/// One parsed relation with its 1-based source line and original text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLine {
    pub line: usize,
    pub text: String,
    pub word: RelationWord,
}

/// One relation per line; blank lines and `#` comments are ignored.
pub fn parse_relations(text: &str) -> Result<Vec<RelationLine>, FormatError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let word = RelationWord::parse(body).map_err(|source| FormatError::Relation { line: i + 1, source })?;
        out.push(RelationLine {
            line: i + 1,
            text: body.to_string(),
            word,
        });
    }
    Ok(out)
}
