use anyhow::{bail, Result};
use clap::Args;
use curvop::extremal::{
    case_extremum_closed, case_extremum_numeric, k1_ratio_check, lagrange_residual, Pattern, RatioCheck,
};
use serde::Serialize;
use serde_json::json;

use crate::args::{Common, DimList};
use crate::output::{num, to_value, Output};

#[derive(Args, Clone, Debug)]
pub struct ExtremalArgs {
    #[arg(long, default_value = "4..12")]
    pub dims: DimList,
    #[arg(long, default_value_t = curvop::extremal::DEFAULT_STARTS)]
    pub starts: usize,
    /// Upper end of the k₁ ratio scan (from n = 4).
    #[arg(long, default_value_t = 1000)]
    pub ratio_max: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Serialize)]
struct Config<'a> {
    dims: &'a DimList,
    starts: usize,
    ratio_max: usize,
    seed: u64,
    tol: f64,
}

#[derive(Serialize)]
pub struct Row {
    pub n: usize,
    pub pattern: &'static str,
    pub closed_form: f64,
    pub numeric: f64,
    pub diff: f64,
    pub lagrange_residual: f64,
    pub dispersion: f64,
    pub converged: usize,
    pub passed: bool,
}

pub fn run(a: &ExtremalArgs) -> Result<Output> {
    a.dims.require_min(4, "the extremal cases need n >= 4")?;
    if a.starts == 0 {
        bail!("--starts must be at least 1");
    }
    if a.ratio_max < 4 {
        bail!("--ratio-max must be at least 4");
    }
    let tol = a.common.tol_or(1e-6)?;
    let mut rows = Vec::new();
    for &n in &a.dims.0 {
        for p in Pattern::ALL {
            let closed = case_extremum_closed(n, p)?;
            let found = case_extremum_numeric(n, p, a.starts, a.common.seed)?;
            let diff = (found.max_value - closed).abs();
            let lr = lagrange_residual(p, &found.argmax);
            rows.push(Row {
                n,
                pattern: p.name(),
                closed_form: closed,
                numeric: found.max_value,
                diff,
                lagrange_residual: lr,
                dispersion: found.dispersion,
                converged: found.converged,
                passed: diff <= tol && lr <= tol,
            });
        }
    }
    let ratios: Vec<RatioCheck> = (4..=a.ratio_max).map(k1_ratio_check).collect::<Result<_, _>>()?;
    let ratio_failures: Vec<usize> = ratios.iter().filter(|r| !r.holds).map(|r| r.n).collect();
    let passed = rows.iter().all(|r| r.passed) && ratio_failures.is_empty();
    let table = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.pattern.to_string(),
                num(r.closed_form),
                num(r.numeric),
                num(r.diff),
                num(r.lagrange_residual),
                num(r.dispersion),
                r.passed.to_string(),
            ]
        })
        .collect();
    let notes = vec![format!("ratio-check 4..{} failures {:?}", a.ratio_max, ratio_failures)];
    let config =
        to_value(&Config { dims: &a.dims, starts: a.starts, ratio_max: a.ratio_max, seed: a.common.seed, tol });
    let results = json!({
        "rows": rows,
        "ratio_check": { "lo": 4, "hi": a.ratio_max, "all_hold": ratio_failures.is_empty(), "failures": ratio_failures },
    });
    Ok(Output {
        command: "extremal",
        config,
        passed,
        results,
        columns: vec!["n", "pattern", "closed_form", "numeric", "diff", "lagrange_residual", "dispersion", "passed"],
        rows: table,
        notes,
    })
}
