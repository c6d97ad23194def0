use anyhow::{bail, Context as _, Result};
use clap::{Args, ValueEnum};
use curvop::sequence::{
    check_cell, dimension_b, dimension_size, g_profile, hypothesis_k2, BruteMode, CellCheck, SeqProblem,
    DEFAULT_RESOLUTION,
};
use serde::Serialize;
use serde_json::json;

use crate::args::Common;
use crate::output::{num, to_value, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    Grid,
    Random,
}

#[derive(Args, Clone, Debug)]
pub struct MinimizeArgs {
    /// Dimension; sets N and B (and k₂ unless given).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long = "C", default_value_t = 1.0)]
    pub c: f64,
    /// Run the built-in grid of cells: N ∈ 5..10, k₂ ∈ 1..3, B over a fixed
    /// synthetic set and B(n) for n ∈ 4..12.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, value_enum, default_value_t = Oracle::Grid)]
    pub oracle: Oracle,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub resolution: usize,
    /// Random feasible starts for `--oracle random`.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Maximum number of lattice points visited per cell.
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: usize,
    #[command(flatten)]
    pub common: Common,
}

pub const SYNTHETIC_B: [f64; 3] = [-0.05, 0.05, 0.5];

/// Cells of the built-in sweep, in report order.
pub fn sweep_cells() -> Vec<(usize, usize, f64)> {
    let mut bs: Vec<f64> = SYNTHETIC_B.to_vec();
    bs.extend((4..=12).map(dimension_b::<f64>));
    let mut out = Vec::new();
    for big_n in 5..=10 {
        for k2 in 1..=3usize.min(big_n - 1) {
            for &b in &bs {
                out.push((big_n, k2, b));
            }
        }
    }
    out
}

#[derive(Serialize)]
struct Config {
    cells: Vec<(usize, usize, f64)>,
    n: Option<usize>,
    #[serde(rename = "C")]
    c: f64,
    oracle: Oracle,
    resolution: usize,
    samples: usize,
    budget: usize,
    seed: u64,
}

#[derive(Serialize)]
struct CellOut {
    check: CellCheck<f64>,
    g_argmin_m: usize,
    g_endpoint: bool,
    passed: bool,
}

fn cells(a: &MinimizeArgs) -> Result<Vec<(usize, usize, f64)>> {
    if a.sweep {
        if a.n.is_some() || a.big_n.is_some() || a.k2.is_some() || a.b.is_some() {
            bail!("--sweep takes no cell parameters");
        }
        return Ok(sweep_cells());
    }
    if let Some(n) = a.n {
        if a.big_n.is_some() || a.b.is_some() {
            bail!("--n fixes N and B; drop --N/--B");
        }
        if n < 4 {
            bail!("--n must be at least 4");
        }
        let k2 = match a.k2 {
            Some(k) => k,
            None => hypothesis_k2(n).context("no k2 for this dimension")?.0,
        };
        return Ok(vec![(dimension_size(n), k2, dimension_b(n))]);
    }
    match (a.big_n, a.k2, a.b) {
        (Some(big_n), Some(k2), Some(b)) => Ok(vec![(big_n, k2, b)]),
        _ => bail!("give --n, or all of --N --k2 --B, or --sweep"),
    }
}

pub fn run(a: &MinimizeArgs) -> Result<Output> {
    let list = cells(a)?;
    let mode = match a.oracle {
        Oracle::Grid => BruteMode::Grid { resolution: a.resolution },
        Oracle::Random => BruteMode::Random { samples: a.samples },
    };
    let mut out = Vec::with_capacity(list.len());
    for (i, &(big_n, k2, b)) in list.iter().enumerate() {
        let p = SeqProblem::new(big_n, k2, a.c, 0.0, b)?;
        let seed = curvop::seed::cell_seed(a.common.seed, &[i as u64]);
        let check = check_cell(&p, mode, a.budget, seed)?;
        let g = g_profile(big_n, k2, a.c, b)?;
        let g_endpoint = g.argmin_m == 1 || g.argmin_m == k2;
        let passed = check.sufficient && check.dichotomy.unwrap_or(true) && g_endpoint;
        out.push(CellOut { check, g_argmin_m: g.argmin_m, g_endpoint, passed });
    }
    let passed = out.iter().all(|c| c.passed);
    let rows = out
        .iter()
        .map(|c| {
            let k = &c.check;
            let opt = |x: Option<bool>| x.map(|v| v.to_string()).unwrap_or_default();
            vec![
                k.big_n.to_string(),
                k.k2.to_string(),
                num(k.b),
                num(k.min_candidate),
                k.argmin_candidate.to_string(),
                num(k.brute.min_value),
                num(k.brute.tol_grid),
                k.brute.points.to_string(),
                k.sufficient.to_string(),
                k.a_argmin.map(num).unwrap_or_default(),
                opt(k.dichotomy),
                c.g_argmin_m.to_string(),
                c.passed.to_string(),
            ]
        })
        .collect();
    let config = to_value(&Config {
        cells: list,
        n: a.n,
        c: a.c,
        oracle: a.oracle,
        resolution: a.resolution,
        samples: a.samples,
        budget: a.budget,
        seed: a.common.seed,
    });
    Ok(Output {
        command: "minimize",
        config,
        passed,
        results: json!({ "cells": out }),
        columns: vec![
            "N",
            "k2",
            "B",
            "min_candidate",
            "argmin_candidate_m",
            "brute_min",
            "tol_grid",
            "points",
            "sufficient",
            "a_argmin",
            "dichotomy",
            "g_argmin_m",
            "passed",
        ],
        rows,
        notes: Vec::new(),
    })
}
