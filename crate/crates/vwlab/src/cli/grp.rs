use serde_json::{json, Value};
use vwlab_core::group::{
    derived_series_grp, evaluate_relation, group_exponent, lower_central_series_grp, vector_semidirect,
    CommutatorConvention, GroupSeries, MatrixGroup, RelationWord,
};
use vwlab_core::lie::SeriesClass;

use super::{load, resolve_cap, CliError, Ctx, GroupInput, GrpCommand, EXIT_FAILED, EXIT_OK};
use crate::formats::{group_to_string, parse_group, parse_relations};

pub(super) fn run(ctx: &mut Ctx, cmd: GrpCommand) -> Result<i32, CliError> {
    match cmd {
        GrpCommand::Order(i) => {
            let (g, cap) = open(&i)?;
            let set = g.enumerate(cap)?;
            let exponent = group_exponent(&set);
            if ctx.json {
                ctx.print_json(&json!({"order": set.order(), "exponent": exponent}))?;
            } else {
                ctx.print(&format!("order {}\nexponent {exponent}\n", set.order()))?;
            }
            Ok(EXIT_OK)
        }
        GrpCommand::Series(i) => {
            let (g, cap) = open(&i)?;
            let lcs = lower_central_series_grp(&g, cap)?;
            let derived = derived_series_grp(&g, cap)?;
            if ctx.json {
                ctx.print_json(&json!({"lower_central": series_json(&lcs), "derived": series_json(&derived)}))?;
            } else {
                let text = format!(
                    "lower central series: orders {}, {}\nderived series: orders {}, {}\n",
                    orders(&lcs),
                    verdict(&lcs, "nilpotent of class", "not nilpotent"),
                    orders(&derived),
                    verdict(&derived, "solvable of derived length", "not solvable"),
                );
                ctx.print(&text)?;
            }
            Ok(EXIT_OK)
        }
        GrpCommand::Relations { input, relations } => {
            let (g, _) = open(&input)?;
            let rels = load(&relations, parse_relations)?;
            relations_table(ctx, &g, &rels)
        }
        GrpCommand::Semidirect(i) => {
            let (g, _) = open(&i)?;
            ctx.print(&group_to_string(&vector_semidirect(&g)))?;
            Ok(EXIT_OK)
        }
    }
}

fn open(i: &GroupInput) -> Result<(MatrixGroup, usize), CliError> {
    let cap = resolve_cap(i.cap)?;
    Ok((load(&i.input, parse_group)?, cap))
}

fn orders(s: &GroupSeries) -> String {
    let o: Vec<String> = s.orders().iter().map(ToString::to_string).collect();
    format!("[{}]", o.join(", "))
}

fn verdict(s: &GroupSeries, finite: &str, infinite: &str) -> String {
    match s.class {
        SeriesClass::Terminates(k) => format!("{finite} {k}"),
        SeriesClass::Stabilizes => infinite.to_string(),
    }
}

fn series_json(s: &GroupSeries) -> Value {
    let class = match s.class {
        SeriesClass::Terminates(k) => json!(k),
        SeriesClass::Stabilizes => Value::Null,
    };
    json!({"orders": s.orders(), "class": class})
}

/// Evaluates every relation under both commutator conventions; the exit
/// status follows the default `[g,h] = g^-1 h^-1 g h`.
fn relations_table(ctx: &mut Ctx, g: &MatrixGroup, rels: &[crate::formats::RelationLine]) -> Result<i32, CliError> {
    let mut rows = Vec::with_capacity(rels.len());
    for r in rels {
        let at_line = |e| CliError::Input(format!("line {}: {e}", r.line));
        let left = evaluate_relation(g, &r.word).map_err(at_line)?;
        let right_word = RelationWord::parse_with(&r.text, CommutatorConvention::RightInverse).map_err(at_line)?;
        let right = evaluate_relation(g, &right_word).map_err(at_line)?;
        rows.push((r, left, right));
    }
    let all_left = rows.iter().all(|(_, l, _)| *l);
    let all_right = rows.iter().all(|(_, _, r)| *r);
    if ctx.json {
        let list: Vec<Value> = rows
            .iter()
            .map(|(r, l, rr)| json!({"line": r.line, "relation": r.text, "holds": l, "holds_right_inverse": rr}))
            .collect();
        ctx.print_json(&json!({
            "relations": list,
            "all_hold": all_left,
            "all_hold_right_inverse": all_right,
        }))?;
    } else {
        let width = rows
            .iter()
            .map(|(r, _, _)| r.text.chars().count())
            .max()
            .unwrap_or(0)
            .max(8);
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        let mut out = format!("{:<width$}  g^-1h^-1gh  ghg^-1h^-1\n", "relation");
        for (r, l, rr) in &rows {
            out.push_str(&format!("{:<width$}  {:<10}  {}\n", r.text, mark(*l), mark(*rr)));
        }
        let summary = match (all_left, all_right) {
            (true, true) => "all relations hold under both commutator conventions",
            (true, false) => "all relations hold under [g,h] = g^-1 h^-1 g h only",
            (false, true) => "relations fail under [g,h] = g^-1 h^-1 g h but hold under [g,h] = g h g^-1 h^-1",
            (false, false) => "some relations fail under both commutator conventions",
        };
        out.push_str(summary);
        out.push('\n');
        ctx.print(&out)?;
    }
    Ok(if all_left { EXIT_OK } else { EXIT_FAILED })
}
