use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context as _, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Dimension list: `4,5,6`, `4..10` (inclusive) or a mix such as `4..6,9`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DimList(pub Vec<usize>);

impl FromStr for DimList {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once("..") {
                Some((lo, hi)) => {
                    let lo: usize = lo.trim().parse().with_context(|| format!("bad range start in {part:?}"))?;
                    let hi: usize = hi
                        .trim()
                        .trim_start_matches('=')
                        .parse()
                        .with_context(|| format!("bad range end in {part:?}"))?;
                    if lo > hi {
                        bail!("empty range {part:?}");
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(part.parse().with_context(|| format!("bad dimension {part:?}"))?),
            }
        }
        if out.is_empty() {
            bail!("no dimensions given");
        }
        Ok(DimList(out))
    }
}

impl DimList {
    pub fn require_min(&self, min: usize, why: &str) -> Result<()> {
        if let Some(&n) = self.0.iter().find(|&&n| n < min) {
            bail!("dimension {n} < {min}: {why}");
        }
        Ok(())
    }
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Master seed; every cell derives its own sub-seed from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance (command-specific default).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to all cores). Does not affect the report.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl Common {
    pub fn tol_or(&self, default: f64) -> Result<f64> {
        let tol = self.tol.unwrap_or(default);
        if !(tol > 0.0 && tol.is_finite()) {
            bail!("--tol must be positive and finite, got {tol}");
        }
        Ok(tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_lists() {
        assert_eq!("4,5,6".parse::<DimList>().unwrap().0, vec![4, 5, 6]);
        assert_eq!("4..7".parse::<DimList>().unwrap().0, vec![4, 5, 6, 7]);
        assert_eq!("4..=5, 9".parse::<DimList>().unwrap().0, vec![4, 5, 9]);
        assert!("7..4".parse::<DimList>().is_err());
        assert!("".parse::<DimList>().is_err());
        assert!("x".parse::<DimList>().is_err());
    }
}
