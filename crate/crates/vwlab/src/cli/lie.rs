use serde_json::{json, Value};
use vwlab_core::lie::{
    check_hom, derivations, derived_series, is_isomorphic_via, lower_central_series, semidirect_by_action, HomKind,
    LieAlgebra, LieViolation, LinearMap, SeriesClass, SeriesKind, SeriesReport,
};

use super::{load, superscript, CliError, Ctx, LieCommand, EXIT_FAILED, EXIT_OK};
use crate::formats::{lie_to_string, matrix_to_value, parse_lie, parse_matrix, parse_matrix_list, parse_vectors};

pub(super) fn run(ctx: &mut Ctx, cmd: LieCommand) -> Result<i32, CliError> {
    match cmd {
        LieCommand::Validate(i) => validate(ctx, &load(&i.input, parse_lie)?),
        LieCommand::Series(i) => series(ctx, &load(&i.input, parse_lie)?),
        LieCommand::Derive(i) => derive(ctx, &load(&i.input, parse_lie)?),
        LieCommand::Generate {
            input,
            generators,
            ideal,
        } => {
            let l = load(&input.input, parse_lie)?;
            let gens = load(&generators, |t| parse_vectors(t, l.field(), l.dim()))?;
            generate(ctx, &l, &gens, ideal)
        }
        LieCommand::Semidirect { input, on, action } => {
            let b = load(&input.input, parse_lie)?;
            let x = load(&on, parse_lie)?;
            let actions = load(&action, |t| parse_matrix_list(t, x.field(), x.dim()))?;
            let product = semidirect_by_action(&b, &x, &actions)?;
            if ctx.json {
                ctx.print(&lie_to_string(&product.algebra))?;
            } else {
                let mut text = format!(
                    "semidirect product of dim {} with basis {}\n",
                    product.algebra.dim(),
                    product.algebra.labels().join(", ")
                );
                for line in product.algebra.format_table() {
                    text.push_str(&format!("  {line}\n"));
                }
                ctx.print(&text)?;
            }
            Ok(EXIT_OK)
        }
        LieCommand::HomCheck { input, codomain, map } => {
            let dom = load(&input.input, parse_lie)?;
            let cod = load(&codomain, parse_lie)?;
            let m = load(&map, |t| parse_matrix(t, cod.field(), Some((cod.dim(), dom.dim()))))?;
            let f = LinearMap::new(dom, cod, m)?;
            let kind = check_hom(&f);
            let name = match kind {
                HomKind::NotHom => "not-hom",
                HomKind::Hom => "hom",
                HomKind::MonoHom => "mono-hom",
            };
            let iso = is_isomorphic_via(&f);
            if ctx.json {
                ctx.print_json(&json!({"kind": name, "isomorphism": iso}))?;
            } else {
                let suffix = if iso { " (isomorphism)" } else { "" };
                ctx.print(&format!("{name}{suffix}\n"))?;
            }
            Ok(if kind == HomKind::NotHom { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

fn violation(l: &LieAlgebra, v: &LieViolation) -> (Value, String) {
    let lab = |i: usize| l.label(i).to_string();
    match *v {
        LieViolation::NotAlternating { i, k } => (
            json!({"kind": "not-alternating", "basis": [lab(i)], "coefficient": lab(k)}),
            format!("[{0}, {0}] has a nonzero {1} coefficient", lab(i), lab(k)),
        ),
        LieViolation::NotAntisymmetric { i, j, k } => (
            json!({"kind": "not-antisymmetric", "basis": [lab(i), lab(j)], "coefficient": lab(k)}),
            format!(
                "[{0}, {1}] != -[{1}, {0}] in the {2} coefficient",
                lab(i),
                lab(j),
                lab(k)
            ),
        ),
        LieViolation::Jacobi { i, j, l: m } => (
            json!({"kind": "jacobi", "triple": [lab(i), lab(j), lab(m)]}),
            format!("Jacobi identity fails for ({}, {}, {})", lab(i), lab(j), lab(m)),
        ),
    }
}

fn validate(ctx: &mut Ctx, l: &LieAlgebra) -> Result<i32, CliError> {
    match l.validate() {
        Ok(()) => {
            if ctx.json {
                ctx.print_json(&json!({"valid": true}))?;
            } else {
                ctx.print(&format!("valid Lie algebra of dim {} over {}\n", l.dim(), l.field()))?;
            }
            Ok(EXIT_OK)
        }
        Err(v) => {
            let (value, text) = violation(l, &v);
            if ctx.json {
                ctx.print_json(&json!({"valid": false, "violation": value}))?;
            } else {
                ctx.print(&format!("invalid: {text}\n"))?;
            }
            Ok(EXIT_FAILED)
        }
    }
}

fn series_json(l: &LieAlgebra, s: &SeriesReport) -> Value {
    let bases: Vec<Vec<String>> = s
        .terms
        .iter()
        .map(|t| t.basis_vectors().iter().map(|v| l.format_vector(v)).collect())
        .collect();
    let class = match s.class {
        SeriesClass::Terminates(k) => json!(k),
        SeriesClass::Stabilizes => Value::Null,
    };
    json!({"dims": s.dims(), "class": class, "bases": bases})
}

fn series_text(l: &LieAlgebra, s: &SeriesReport) -> String {
    let (title, verdict) = match (s.kind, s.class) {
        (SeriesKind::LowerCentral, SeriesClass::Terminates(k)) => ("lower central series", format!("{k}-nilpotent")),
        (SeriesKind::LowerCentral, SeriesClass::Stabilizes) => ("lower central series", "not nilpotent".into()),
        (SeriesKind::Derived, SeriesClass::Terminates(k)) => ("derived series", format!("{k}-solvable")),
        (SeriesKind::Derived, SeriesClass::Stabilizes) => ("derived series", "not solvable".into()),
    };
    let dims: Vec<String> = s.dims().iter().map(ToString::to_string).collect();
    let mut out = format!("{title}: dims [{}], {verdict}\n", dims.join(", "));
    for (k, t) in s.terms.iter().enumerate() {
        let name = match s.kind {
            SeriesKind::LowerCentral => format!("L{}", superscript(k)),
            SeriesKind::Derived => format!("L⁽{}⁾", superscript(k)),
        };
        let body = if t.is_zero() {
            "0".to_string()
        } else {
            let vs: Vec<String> = t.basis_vectors().iter().map(|v| l.format_vector(v)).collect();
            format!("span{{{}}}", vs.join(", "))
        };
        out.push_str(&format!("  {name} = {body}\n"));
    }
    if s.class == SeriesClass::Stabilizes {
        out.push_str("  (stabilizes at the last term)\n");
    }
    out
}

fn series(ctx: &mut Ctx, l: &LieAlgebra) -> Result<i32, CliError> {
    let lcs = lower_central_series(l)?;
    let derived = derived_series(l)?;
    if ctx.json {
        ctx.print_json(&json!({
            "lower_central": series_json(l, &lcs),
            "derived": series_json(l, &derived),
        }))?;
    } else {
        ctx.print(&format!("{}{}", series_text(l, &lcs), series_text(l, &derived)))?;
    }
    Ok(EXIT_OK)
}

fn derive(ctx: &mut Ctx, l: &LieAlgebra) -> Result<i32, CliError> {
    let der = derivations(l)?;
    if ctx.json {
        let basis: Vec<Value> = der.basis_maps.iter().map(matrix_to_value).collect();
        ctx.print_json(&json!({
            "dim": der.algebra.dim(),
            "basis": basis,
            "brackets": der.algebra.format_table(),
        }))?;
    } else {
        let mut out = format!("Der has dim {}\n", der.algebra.dim());
        for (label, m) in der.algebra.labels().iter().zip(&der.basis_maps) {
            let rows: Vec<String> = m
                .row_iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            out.push_str(&format!("  {label} = [{}]\n", rows.join("; ")));
        }
        let table = der.algebra.format_table();
        if !table.is_empty() {
            out.push_str("brackets:\n");
            for line in table {
                out.push_str(&format!("  {line}\n"));
            }
        }
        ctx.print(&out)?;
    }
    Ok(EXIT_OK)
}

fn generate(ctx: &mut Ctx, l: &LieAlgebra, gens: &[Vec<vwlab_core::Scalar>], ideal: bool) -> Result<i32, CliError> {
    let s = if ideal {
        l.ideal_generated(gens)?
    } else {
        l.subalgebra_generated(gens)?
    };
    let basis: Vec<String> = s.basis_vectors().iter().map(|v| l.format_vector(v)).collect();
    if ctx.json {
        let vectors: Vec<Value> = s
            .basis_vectors()
            .iter()
            .map(|v| crate::formats::vector_value(v))
            .collect();
        ctx.print_json(&json!({"dim": s.dim(), "basis": basis, "vectors": vectors}))?;
    } else {
        let what = if ideal { "ideal" } else { "subalgebra" };
        ctx.print(&format!(
            "generated {what} has dim {}: span{{{}}}\n",
            s.dim(),
            basis.join(", ")
        ))?;
    }
    Ok(EXIT_OK)
}
