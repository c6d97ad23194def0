use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use super::ExtremalError;
use crate::seed::{cell_seed, rng};

pub const DEFAULT_STARTS: usize = 64;

const MAX_ITERS: usize = 10_000;
const STOP_STEP: f64 = 1e-12;

/// Index coincidence patterns of `(a_i + a_j + a_k + a_l)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// Four distinct indices.
    Distinct4,
    /// `i = k`: `(2a_i + a_j + a_l)²`.
    RepeatIK,
    /// `i = k`, `j = l`: `(2a_i + 2a_j)²`.
    DoublePair,
}

impl Pattern {
    pub const ALL: [Pattern; 3] = [Pattern::Distinct4, Pattern::RepeatIK, Pattern::DoublePair];

    fn weights(self) -> &'static [f64] {
        match self {
            Pattern::Distinct4 => &[1.0, 1.0, 1.0, 1.0],
            Pattern::RepeatIK => &[2.0, 1.0, 1.0],
            Pattern::DoublePair => &[2.0, 2.0],
        }
    }

    fn id(self) -> u64 {
        self as u64
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Distinct4 => "distinct4",
            Pattern::RepeatIK => "repeat-i=k",
            Pattern::DoublePair => "double-pair",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = ExtremalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| ExtremalError::BadPattern(s.to_string()))
    }
}

/// Closed-form maximum of `(v·a)²` on `{Σa = 0, |a| = 1}`:
/// `4(n−4)/n`, `2(3n−8)/n`, `8(n−2)/n`.
pub fn case_extremum_closed(n: usize, pattern: Pattern) -> Result<f64, ExtremalError> {
    if n < 4 {
        return Err(ExtremalError::BadDim { n, min: 4 });
    }
    let nf = n as f64;
    Ok(match pattern {
        Pattern::Distinct4 => 4.0 * (nf - 4.0) / nf,
        Pattern::RepeatIK => 2.0 * (3.0 * nf - 8.0) / nf,
        Pattern::DoublePair => 8.0 * (nf - 2.0) / nf,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericMax {
    pub max_value: f64,
    pub argmax: Vec<f64>,
    /// Spread (max − min) of the final values over converged starts.
    pub dispersion: f64,
    pub converged: usize,
    pub starts: usize,
}

fn coefficient_vector(n: usize, pattern: Pattern) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[..pattern.weights().len()].copy_from_slice(pattern.weights());
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Projects onto `Σa = 0` and rescales to the unit sphere.
fn retract(a: &mut [f64]) {
    let mean = a.iter().sum::<f64>() / a.len() as f64;
    a.iter_mut().for_each(|x| *x -= mean);
    let norm = dot(a, a).sqrt();
    a.iter_mut().for_each(|x| *x /= norm);
}

/// Tangent part of `g` at `a`: orthogonal to the all-ones and radial directions.
fn tangent(g: &mut [f64], a: &[f64]) {
    let mean = g.iter().sum::<f64>() / g.len() as f64;
    g.iter_mut().for_each(|x| *x -= mean);
    let radial = dot(g, a);
    g.iter_mut().zip(a).for_each(|(x, &y)| *x -= radial * y);
}

fn ascend(v: &[f64], seed: u64) -> Option<(f64, Vec<f64>)> {
    let n = v.len();
    let mut g = rng(seed);
    let mut a: Vec<f64> = (0..n).map(|_| g.sample::<f64, _>(StandardNormal)).collect();
    retract(&mut a);
    let mut grad = vec![0.0; n];
    for it in 0..MAX_ITERS {
        let va = dot(v, &a);
        grad.iter_mut().zip(v).for_each(|(x, &y)| *x = 2.0 * va * y);
        tangent(&mut grad, &a);
        let step = 0.1 / (1.0 + it as f64 / 50.0);
        let prev = a.clone();
        a.iter_mut().zip(&grad).for_each(|(x, &d)| *x += step * d);
        retract(&mut a);
        let value = dot(v, &a).powi(2);
        let moved = a.iter().zip(&prev).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
        if moved < STOP_STEP {
            return Some((value, a));
        }
    }
    None
}

/// Multi-start projected gradient ascent for `(v·a)²` on
/// `{Σa = 0, Σa² = 1}`. `distinct4` at `n = 4` is identically zero and is
/// returned without iterating.
pub fn case_extremum_numeric(
    n: usize,
    pattern: Pattern,
    starts: usize,
    seed: u64,
) -> Result<NumericMax, ExtremalError> {
    if n < 4 {
        return Err(ExtremalError::BadDim { n, min: 4 });
    }
    if pattern == Pattern::Distinct4 && n == 4 {
        let s = 0.5f64.sqrt();
        let mut argmax = vec![0.0; 4];
        argmax[0] = s;
        argmax[1] = -s;
        return Ok(NumericMax { max_value: 0.0, argmax, dispersion: 0.0, converged: starts, starts });
    }
    let v = coefficient_vector(n, pattern);
    let runs: Vec<Option<(f64, Vec<f64>)>> =
        (0..starts).into_par_iter().map(|k| ascend(&v, cell_seed(seed, &[n as u64, pattern.id(), k as u64]))).collect();
    let done: Vec<&(f64, Vec<f64>)> = runs.iter().flatten().collect();
    // first index wins ties, so the result matches a sequential scan
    let best = done.iter().copied().reduce(|b, x| if x.0 > b.0 { x } else { b }).ok_or(ExtremalError::OptFailure)?;
    let lo = done.iter().map(|x| x.0).fold(f64::INFINITY, f64::min);
    Ok(NumericMax { max_value: best.0, argmax: best.1.clone(), dispersion: best.0 - lo, converged: done.len(), starts })
}

/// Least-squares residual `min_μ |∇φ(a) − μ₁·1 − μ₂·2a|` of the Lagrange
/// system at `a`.
pub fn lagrange_residual(pattern: Pattern, a: &[f64]) -> f64 {
    let v = coefficient_vector(a.len(), pattern);
    let va = dot(&v, a);
    let grad: Vec<f64> = v.iter().map(|&x| 2.0 * va * x).collect();
    let ones = vec![1.0; a.len()];
    let two_a: Vec<f64> = a.iter().map(|x| 2.0 * x).collect();
    let (g11, g12, g22) = (dot(&ones, &ones), dot(&ones, &two_a), dot(&two_a, &two_a));
    let (b1, b2) = (dot(&ones, &grad), dot(&two_a, &grad));
    let det = g11 * g22 - g12 * g12;
    let mu1 = (b1 * g22 - b2 * g12) / det;
    let mu2 = (g11 * b2 - g12 * b1) / det;
    grad.iter().zip(&two_a).map(|(&g, &t)| (g - mu1 - mu2 * t).powi(2)).sum::<f64>().sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioCheck {
    pub n: usize,
    pub ratio: f64,
    pub k1: usize,
    pub holds: bool,
}

/// `(n²+n−8)/(4(n−2)) ≥ ⌊(n+2)/4⌋`.
pub fn k1_ratio_check(n: usize) -> Result<RatioCheck, ExtremalError> {
    if n < 4 {
        return Err(ExtremalError::BadDim { n, min: 4 });
    }
    let nf = n as f64;
    let ratio = (nf * nf + nf - 8.0) / (4.0 * (nf - 2.0));
    let k1 = (n + 2) / 4;
    Ok(RatioCheck { n, ratio, k1, holds: ratio >= k1 as f64 })
}
