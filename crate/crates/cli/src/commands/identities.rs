use anyhow::{bail, Result};
use clap::Args;
use curvop::identities::{run_suite, summarize, IdentityReport, SuiteConfig, SummaryRow};
use serde::Serialize;
use serde_json::json;

use crate::args::{Common, DimList};
use crate::output::{num, to_value, Output};

#[derive(Args, Clone, Debug)]
pub struct IdentitiesArgs {
    #[arg(long, default_value = "4..10")]
    pub dims: DimList,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Emit the per-(identity, n) summary only.
    #[arg(long)]
    pub summary_only: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Serialize)]
struct Config<'a> {
    dims: &'a DimList,
    trials: usize,
    seed: u64,
    tol: f64,
    summary_only: bool,
}

pub fn run(a: &IdentitiesArgs) -> Result<Output> {
    if a.trials == 0 {
        bail!("--trials must be at least 1");
    }
    a.dims.require_min(4, "the Weyl identities need n >= 4")?;
    let tol = a.common.tol_or(1e-8)?;
    let cfg = SuiteConfig { dims: a.dims.0.clone(), trials: a.trials, seed: a.common.seed, tol };
    let reports = run_suite(&cfg)?;
    let summary = summarize(&reports);
    let passed = !reports.iter().any(IdentityReport::is_violation);
    let failing: Vec<&SummaryRow> = summary.iter().filter(|r| r.gated && r.pass_rate < 1.0).collect();
    for r in &failing {
        eprintln!("FAIL {} n={} pass_rate={} max_residual={:e}", r.identity_id, r.n, r.pass_rate, r.max_residual);
    }
    let config =
        to_value(&Config { dims: &a.dims, trials: a.trials, seed: a.common.seed, tol, summary_only: a.summary_only });
    let (columns, rows, results) = if a.summary_only {
        (summary_columns(), summary_rows(&summary), json!({ "summary": summary }))
    } else {
        (report_columns(), report_rows(&reports), json!({ "summary": summary, "reports": reports }))
    };
    Ok(Output { command: "identities", config, passed, results, columns, rows, notes: Vec::new() })
}

fn summary_columns() -> Vec<&'static str> {
    vec!["identity_id", "n", "trials", "max_residual", "pass_rate", "gated"]
}

fn summary_rows(s: &[SummaryRow]) -> Vec<Vec<String>> {
    s.iter()
        .map(|r| {
            vec![
                r.identity_id.clone(),
                r.n.to_string(),
                r.trials.to_string(),
                num(r.max_residual),
                num(r.pass_rate),
                r.gated.to_string(),
            ]
        })
        .collect()
}

fn report_columns() -> Vec<&'static str> {
    vec!["identity_id", "n", "seed", "einstein", "kind", "relation", "lhs", "rhs", "residual", "tol", "passed"]
}

fn report_rows(reps: &[IdentityReport]) -> Vec<Vec<String>> {
    let tag = |v: serde_json::Value| v.as_str().unwrap_or_default().to_string();
    reps.iter()
        .map(|r| {
            vec![
                r.identity_id.clone(),
                r.context.n.to_string(),
                r.context.seed.to_string(),
                r.context.einstein.to_string(),
                tag(to_value(&r.kind)),
                tag(to_value(&r.relation)),
                num(r.lhs),
                num(r.rhs),
                num(r.residual),
                num(r.tol),
                r.passed.to_string(),
            ]
        })
        .collect()
}
