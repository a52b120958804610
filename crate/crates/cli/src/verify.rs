use std::io::Write;

use dickson_core::verify::{self as suites, VerificationReport, VerifyConfig};

use crate::args::{ReportFormat, VerifyArgs};
use crate::CliError;

/// Reports go to `out` without timings so that repeated runs are
/// byte-identical; per-suite wall time goes to `err`.
pub fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let cfg = VerifyConfig::new(args.seed).with_trials(args.trials);
    let reports: Vec<VerificationReport> = suites::verify(&args.suite, &cfg)?
        .into_iter()
        .map(|mut r| {
            if let Some(ms) = r.elapsed_ms.take() {
                let _ = writeln!(err, "{}: {ms} ms", r.suite);
            }
            r
        })
        .collect();
    match args.format {
        ReportFormat::Human => {
            for r in &reports {
                write_human(r, out)?;
            }
        }
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports)?;
            writeln!(out)?;
        }
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.suite.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "failing suites: {}",
            failed.join(", ")
        )))
    }
}

fn write_human(r: &VerificationReport, out: &mut dyn Write) -> Result<(), CliError> {
    let status = if r.passed() { "ok" } else { "FAIL" };
    writeln!(
        out,
        "{:<12} {status:<4} checks={} failures={} seed={}",
        r.suite, r.trials, r.failures, r.seed
    )?;
    if let Some(cx) = &r.counterexample {
        writeln!(out, "  identity: {}", cx.identity)?;
        let inputs: Vec<String> = cx.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "  inputs:   {}", inputs.join(" "))?;
        writeln!(out, "  lhs:      {}", cx.lhs)?;
        writeln!(out, "  rhs:      {}", cx.rhs)?;
    }
    Ok(())
}
