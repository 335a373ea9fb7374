use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use super::config::OutputFormat;
use super::run::ExperimentReport;
use crate::Result;

/// Renders a report as pretty JSON or as CSV.
///
/// CSV has one `trial,decision,calls,stage` row per trial. Campaign blocks
/// open with a `# eps: <value>` comment and the file ends with a
/// `# aggregate:` line.
pub fn render_report(report: &ExperimentReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => Ok(render_csv(report)),
    }
}

fn render_csv(report: &ExperimentReport) -> String {
    let mut out = String::from("trial,decision,calls,stage\n");
    let mut block = None;
    for v in &report.verdicts {
        if let Some(eps) = v.eps.filter(|e| block != Some(*e)) {
            block = Some(eps);
            let _ = writeln!(out, "# eps: {eps}");
        }
        let _ = writeln!(out, "{},{},{},{}", v.trial, v.decision, v.calls, v.stage);
    }
    let _ = writeln!(
        out,
        "# aggregate: trials={} accepted={} acceptance_rate={} stderr={} mean_calls={} total_calls={} seed={}",
        report.verdicts.len(),
        report.accepted,
        report.acceptance_rate,
        report.stderr,
        report.mean_calls,
        report.total_calls,
        report.seed
    );
    if let Some(c) = &report.campaign {
        let _ = writeln!(
            out,
            "# slope: {} within_band={}",
            c.slope, c.slope_within_band
        );
    }
    out
}

/// Writes the rendered report to `out`, or to stdout when `out` is `None`.
pub fn emit_report(
    report: &ExperimentReport,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<()> {
    let text = render_report(report, format)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
