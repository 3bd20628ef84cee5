//! Exact witnesses for the amalgam counterexamples and the checklists that
//! verify them.
//!
//! Each scenario returns a [`Report`]: an ordered list of [`CheckResult`]s,
//! each recording the expected value fixed in the check definition next to
//! the computed one. Computation errors become failed checks, never panics.

mod amalgam;
mod groups;
mod lie;

pub use amalgam::verify_amalgam_obstruction;
pub use groups::{
    build_group_witness, verify_group_counterexample, GroupWitness, B_PRIME_RELATIONS, B_RELATIONS, S_RELATIONS,
};
pub use lie::{build_lie_witness, verify_lie_counterexample, LieWitness};

use std::fmt::{self, Display, Write as _};

use serde::Serialize;
use serde_json::{json, Value};
use vwlab_core::lie::{SeriesClass, SeriesReport};
use vwlab_core::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    /// Short tag naming the claim the check covers.
    pub anchor: String,
    pub status: Status,
    pub data: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Groups,
    Lie,
    Amalgam,
}

impl Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::Groups => "groups",
            Scenario::Lie => "lie",
            Scenario::Amalgam => "amalgam",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: Scenario,
    pub field: String,
    pub checks: Vec<CheckResult>,
    /// Informational remarks: reading choices and assumptions that are
    /// not themselves checked.
    pub notes: Vec<String>,
    pub overall: bool,
}

impl Report {
    pub(crate) fn new(scenario: Scenario, field: FieldSpec, checks: Vec<CheckResult>, notes: Vec<String>) -> Self {
        let overall = checks.iter().all(|c| c.status != Status::Fail);
        Report {
            scenario,
            field: field.to_string(),
            checks,
            notes,
            overall,
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} over {}", self.scenario, self.field);
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}: {}", c.status, c.id, c.description);
            let field = |k: &str| c.data.get(k).map(Value::to_string);
            match c.status {
                Status::Pass => {
                    if let Some(v) = field("computed") {
                        let _ = writeln!(out, "         {v}");
                    }
                }
                Status::Fail => {
                    for k in ["expected", "computed", "error"] {
                        if let Some(v) = field(k) {
                            let _ = writeln!(out, "         {k}: {v}");
                        }
                    }
                }
                Status::Skipped => {
                    if let Some(Value::String(r)) = c.data.get("reason") {
                        let _ = writeln!(out, "         reason: {r}");
                    }
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        let verdict = if self.overall { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  overall: {verdict}");
        out
    }
}

/// Static part of a check definition.
pub(crate) struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
}

impl Check {
    fn result(&self, status: Status, data: Value) -> CheckResult {
        CheckResult {
            id: self.id.to_string(),
            description: self.description.to_string(),
            anchor: self.anchor.to_string(),
            status,
            data,
        }
    }

    /// Passes iff `computed == expected`.
    pub fn compare(&self, expected: Value, computed: Value) -> CheckResult {
        self.compare_with(expected, computed, Value::Null)
    }

    /// Like [`Check::compare`], also recording `detail`, which is not compared.
    pub fn compare_with(&self, expected: Value, computed: Value, detail: Value) -> CheckResult {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut data = json!({"expected": expected, "computed": computed});
        if !detail.is_null() {
            data["detail"] = detail;
        }
        self.result(status, data)
    }

    pub fn skip(&self, reason: &str, computed: Value) -> CheckResult {
        self.result(Status::Skipped, json!({"reason": reason, "computed": computed}))
    }

    pub fn error(&self, e: impl Display) -> CheckResult {
        self.result(Status::Fail, json!({"error": e.to_string()}))
    }

    /// Runs a computation producing `(expected, computed)`; errors fail the check.
    pub fn run<E: Display>(&self, f: impl FnOnce() -> Result<(Value, Value), E>) -> CheckResult {
        match f() {
            Ok((expected, computed)) => self.compare(expected, computed),
            Err(e) => self.error(e),
        }
    }
}

/// Which scenarios `verify-paper` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Groups,
    Lie,
    Amalgam,
    All,
}

/// Runs the selected scenarios in a fixed order. The group scenario always
/// works over GF(5); `field` applies to the Lie scenarios.
pub fn run_part(part: Part, field: FieldSpec) -> Vec<Report> {
    let mut out = Vec::new();
    if matches!(part, Part::Groups | Part::All) {
        out.push(verify_group_counterexample());
    }
    if matches!(part, Part::Lie | Part::All) {
        out.push(verify_lie_counterexample(field));
    }
    if matches!(part, Part::Amalgam | Part::All) {
        out.push(verify_amalgam_obstruction(field));
    }
    out
}

pub(crate) fn class_value(class: SeriesClass) -> Value {
    match class {
        SeriesClass::Terminates(k) => json!(k),
        SeriesClass::Stabilizes => json!("stabilizes"),
    }
}

pub(crate) fn series_value(s: &SeriesReport, labels: impl Fn(&[Scalar]) -> String) -> Value {
    let terms: Vec<Vec<String>> = s
        .terms
        .iter()
        .map(|t| t.basis_vectors().iter().map(|v| labels(v)).collect())
        .collect();
    json!({"dims": s.dims(), "class": class_value(s.class), "bases": terms})
}
