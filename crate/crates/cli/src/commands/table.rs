use anyhow::{bail, Result};
use clap::Args;
use curvop::sequence::{f_sign_table, TableRow};
use serde::Serialize;
use serde_json::json;

use crate::args::{Common, DimList};
use crate::output::{num, to_value, Output};

#[derive(Args, Clone, Debug)]
pub struct TableArgs {
    /// Contiguous range such as `4..60`.
    #[arg(long, default_value = "4..60")]
    pub n_range: DimList,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Serialize)]
struct Config {
    lo: usize,
    hi: usize,
    tol: f64,
}

/// Closed-form F agrees with the `f_eval` difference.
fn cross_checked(r: &TableRow, tol: f64) -> bool {
    let close = |a: f64, b: f64| (a - b).abs() <= tol * (a.abs().max(b.abs()) + f64::MIN_POSITIVE);
    close(r.F_zero_block, r.F_zero_block_eval) && close(r.F_spike, r.F_spike_eval)
}

pub fn run(a: &TableArgs) -> Result<Output> {
    let dims = &a.n_range.0;
    let (lo, hi) = (dims[0], *dims.last().expect("nonempty"));
    if dims.iter().copied().ne(lo..=hi) {
        bail!("--n-range must be a contiguous range");
    }
    let tol = a.common.tol_or(1e-9)?;
    let rows = f_sign_table(lo, hi)?;
    let checks: Vec<bool> = rows.iter().map(|r| cross_checked(r, tol)).collect();
    let passed = rows.iter().all(|r| r.verdict) && checks.iter().all(|&c| c);
    let table = rows
        .iter()
        .zip(&checks)
        .map(|(r, &c)| {
            let cands: Vec<String> = r.candidate_f_values.iter().map(|&x| num(x)).collect();
            vec![
                r.n.to_string(),
                r.N.to_string(),
                r.k2.to_string(),
                num(r.B),
                num(r.F_zero_block),
                num(r.F_spike),
                r.verdict.to_string(),
                cands.join(";"),
                to_value(&r.route).as_str().unwrap_or_default().to_string(),
                c.to_string(),
            ]
        })
        .collect();
    Ok(Output {
        command: "table",
        config: to_value(&Config { lo, hi, tol }),
        passed,
        results: json!({ "rows": rows, "cross_checked": checks }),
        columns: vec![
            "n",
            "N",
            "k2",
            "B",
            "F_zero_block",
            "F_spike",
            "verdict",
            "candidate_f_values",
            "route",
            "cross_checked",
        ],
        rows: table,
        notes: Vec::new(),
    })
}
