use vwlab_core::FieldSpec;

use super::{CliError, Ctx, PartArg, EXIT_FAILED, EXIT_OK};
use crate::paperlab::{run_part, Part};

/// One report object for a single part, an array of reports for `all`.
pub(super) fn run(ctx: &mut Ctx, part: PartArg, field: FieldSpec) -> Result<i32, CliError> {
    let part = match part {
        PartArg::Groups => Part::Groups,
        PartArg::Lie => Part::Lie,
        PartArg::Amalgam => Part::Amalgam,
        PartArg::All => Part::All,
    };
    let reports = run_part(part, field);
    if ctx.json {
        let value = if part == Part::All {
            serde_json::to_value(&reports)
        } else {
            serde_json::to_value(&reports[0])
        }
        .expect("reports serialize");
        ctx.print_json(&value)?;
    } else {
        let text: Vec<String> = reports.iter().map(|r| r.render_human()).collect();
        ctx.print(&text.join("\n"))?;
    }
    Ok(if reports.iter().all(|r| r.overall) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
