use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context as _, Result};
use clap::{Args, ValueEnum};
use curvop::curvature::{random_curvature, random_einstein, random_weyl, Curvature, ModelSpace, TensorFile};
use curvop::operator::{delta_nonnegative, eigen_residuals, op_second_kind, spectrum, Traces};
use serde::Serialize;

use crate::args::Common;
use crate::output::{num, to_value, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RandomKind {
    General,
    Einstein,
    Weyl,
}

#[derive(Args, Clone, Debug)]
pub struct SpectrumArgs {
    /// flat | sphere | product_spheres
    #[arg(long)]
    pub model: Option<String>,
    /// Random tensor drawn from `--seed`.
    #[arg(long, value_enum)]
    pub random: Option<RandomKind>,
    /// Tensor file (`{"n": .., "entries": [[[[..]]]]}`).
    #[arg(long)]
    pub load: Option<PathBuf>,
    /// Also write the tensor to this file.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    /// Factor dimension for product_spheres.
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Scalar curvature for `--random einstein` (default n(n−1)).
    #[arg(long)]
    pub scalar: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Serialize)]
struct Config<'a> {
    source: String,
    dim: usize,
    seed: u64,
    tol: f64,
    dump: Option<&'a PathBuf>,
}

#[derive(Serialize)]
struct Verdict {
    delta: f64,
    value: f64,
    nonnegative: bool,
}

#[derive(Serialize)]
struct Results {
    n: usize,
    #[serde(rename = "N")]
    size: usize,
    scalar: f64,
    einstein: bool,
    eigenvalues: Vec<f64>,
    traces: Traces,
    eigen_residual: f64,
    symmetry_residual: f64,
    verdicts: Vec<Verdict>,
    /// k-nonnegative and λ_{k+1} ≥ 0 imply (k+1)-nonnegative, for all k.
    monotone: bool,
}

const EINSTEIN_TOL: f64 = 1e-9;

fn source(a: &SpectrumArgs) -> Result<(String, Curvature<f64>)> {
    let picked = [a.model.is_some(), a.random.is_some(), a.load.is_some()].iter().filter(|&&x| x).count();
    if picked != 1 {
        bail!("give exactly one of --model, --random, --load");
    }
    if let Some(name) = &a.model {
        let m = ModelSpace::from_name(name, a.dim, a.kappa, a.p)?;
        return Ok((format!("model:{name}"), m.build()?));
    }
    if let Some(path) = &a.load {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file: TensorFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok((format!("file:{}", path.display()), file.to_curvature(1e-9)?));
    }
    let n = a.dim;
    if n < 3 {
        bail!("--dim must be at least 3");
    }
    let seed = a.common.seed;
    let r = match a.random.expect("checked above") {
        RandomKind::General => random_curvature(n, seed),
        RandomKind::Einstein => random_einstein(n, a.scalar.unwrap_or((n * (n - 1)) as f64), seed)?,
        RandomKind::Weyl => random_weyl(n, seed)?,
    };
    Ok((format!("random:{}", to_value(&a.random).as_str().unwrap_or_default()), r))
}

pub fn deltas(n: usize) -> [f64; 5] {
    [1.0, 2.0, 3.0, ((n + 2) / 4) as f64, 4.5]
}

pub fn run(a: &SpectrumArgs) -> Result<Output> {
    let tol = a.common.tol_or(1e-10)?;
    let (src, r) = source(a)?;
    if let Some(path) = &a.dump {
        let text = TensorFile::from_curvature(&r).to_json();
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let n = r.dim();
    let m = op_second_kind(&r);
    let sp = spectrum(&m)?;
    let lam = &sp.eigenvalues;
    let verdicts = deltas(n)
        .into_iter()
        .map(|d| delta_nonnegative(lam, d).map(|t| Verdict { delta: d, value: t.value, nonnegative: t.holds }))
        .collect::<Result<Vec<_>, _>>()?;
    let mut partial = 0.0;
    let mut monotone = true;
    for k in 0..lam.len().saturating_sub(1) {
        partial += lam[k];
        let next = partial + lam[k + 1];
        if partial >= 0.0 && lam[k + 1] >= 0.0 && next < 0.0 {
            monotone = false;
        }
    }
    let eigen_residual = eigen_residuals(&r, &sp);
    let symmetry_residual = m.symmetry_residual();
    let scale = 1.0 + m.frobenius();
    let passed = eigen_residual <= tol * scale && symmetry_residual <= tol * scale && monotone;
    let res = Results {
        n,
        size: lam.len(),
        scalar: r.scalar(),
        einstein: r.is_einstein(EINSTEIN_TOL),
        eigenvalues: lam.clone(),
        traces: sp.traces(),
        eigen_residual,
        symmetry_residual,
        verdicts,
        monotone,
    };
    let mut rows: Vec<Vec<String>> = lam
        .iter()
        .enumerate()
        .map(|(i, v)| vec!["eigenvalue".into(), (i + 1).to_string(), num(*v), String::new()])
        .collect();
    for (k, v) in [("tr1", res.traces.tr1), ("tr2", res.traces.tr2), ("tr3", res.traces.tr3)] {
        rows.push(vec!["trace".into(), k.into(), num(v), String::new()]);
    }
    for v in &res.verdicts {
        rows.push(vec!["delta".into(), num(v.delta), num(v.value), v.nonnegative.to_string()]);
    }
    let notes = vec![format!("n {n} N {}", res.size), format!("einstein {} monotone {}", res.einstein, res.monotone)];
    let config = to_value(&Config { source: src, dim: n, seed: a.common.seed, tol, dump: a.dump.as_ref() });
    Ok(Output {
        command: "spectrum",
        config,
        passed,
        results: to_value(&res),
        columns: vec!["section", "key", "value", "nonnegative"],
        rows,
        notes,
    })
}
