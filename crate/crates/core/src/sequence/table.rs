use serde::Serialize;

use super::problem::{candidate_points, dimension_b, dimension_size, f_eval};
use super::SequenceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Sign of f at the block candidates.
    FTable,
    /// Sign of the spectral-form coefficient of ⟨ΔR,R⟩ (n = 4, 5).
    SpectralForm,
}

/// Nonnegativity index assumed in dimension n, and how its sign argument runs.
pub fn hypothesis_k2(n: usize) -> Option<(usize, Route)> {
    match n {
        0..=3 => None,
        4 => Some((2, Route::SpectralForm)),
        5 => Some((3, Route::SpectralForm)),
        6 | 7 => Some((1, Route::FTable)),
        8..=10 => Some((2, Route::FTable)),
        _ => Some(((n + 2) / 4, Route::FTable)),
    }
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub N: usize,
    pub k2: usize,
    pub B: f64,
    /// f at the zero block minus f at the uniform point (closed form).
    pub F_zero_block: f64,
    /// f at the single-spike candidate minus f at the uniform point (closed form).
    pub F_spike: f64,
    /// Both differences recomputed by `f_eval`.
    pub F_zero_block_eval: f64,
    pub F_spike_eval: f64,
    pub verdict: bool,
    /// f at every candidate, in `candidate_points` order.
    pub candidate_f_values: Vec<f64>,
    pub route: Route,
    /// Spectral-form coefficients `16(n−4)/(3(n−1)(n+2))` and
    /// `16(n−10)/(3(n−1)(n+2))` (spectral-form route only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_coefficient: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_coefficient_corrected: Option<f64>,
    /// Verdict of the F-table at `k₂ + 1`, when that index is admissible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict_next_k2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn f_zero_block(n: usize, big_n: usize, k2: usize) -> f64 {
    let (nf, bn, k) = (n as f64, big_n as f64, k2 as f64);
    k / (bn * bn * (bn - k)) * ((2.0 * bn - k) / (bn - k) + (nf * nf - 11.0 * nf + 4.0) / (3.0 * nf))
}

fn f_spike(n: usize, big_n: usize, k2: usize) -> f64 {
    let (nf, bn, k) = (n as f64, big_n as f64, k2 as f64);
    let lead = 2.0 * (bn - 1.0) * k * k / (bn * (bn - k) * (bn - k));
    let body = (nf * nf - 11.0 * nf + 4.0) * (bn - k) + 3.0 * nf * (3.0 * bn - (bn + 1.0) * k);
    lead * body / (3.0 * nf * (nf - 1.0) * (nf + 2.0) * (bn - k))
}

fn spectral_coefficient(n: usize, c: f64) -> f64 {
    let nf = n as f64;
    16.0 * (nf - c) / (3.0 * (nf - 1.0) * (nf + 2.0))
}

fn f_positive(n: usize, big_n: usize, k2: usize) -> bool {
    f_zero_block(n, big_n, k2) > 0.0 && f_spike(n, big_n, k2) > 0.0
}

fn row(n: usize) -> Result<TableRow, SequenceError> {
    let (k2, route) = hypothesis_k2(n).ok_or(SequenceError::BadRange { lo: n, hi: n })?;
    let big_n = dimension_size(n);
    let b: f64 = dimension_b(n);
    let cands = candidate_points(big_n, k2, 1.0, b)?;
    let uniform = cands[0].f_value;
    let spike = if k2 == 1 { cands[1].f_value } else { cands[2].f_value };
    let eval_zero = f_eval(&cands[1].lambdas, b, 1.0) - uniform;
    let (fz, fs) = (f_zero_block(n, big_n, k2), f_spike(n, big_n, k2));
    let verdict_next_k2 = (route == Route::FTable && k2 + 1 < big_n).then(|| f_positive(n, big_n, k2 + 1));
    let mut r = TableRow {
        n,
        N: big_n,
        k2,
        B: b,
        F_zero_block: fz,
        F_spike: fs,
        F_zero_block_eval: eval_zero,
        F_spike_eval: spike - uniform,
        verdict: fz > 0.0 && fs > 0.0,
        candidate_f_values: cands.iter().map(|c| c.f_value).collect(),
        route,
        spectral_coefficient: None,
        spectral_coefficient_corrected: None,
        verdict_next_k2,
        note: None,
    };
    match route {
        Route::SpectralForm => {
            let c = spectral_coefficient(n, 4.0);
            r.spectral_coefficient = Some(c);
            r.spectral_coefficient_corrected = Some(spectral_coefficient(n, 10.0));
            r.verdict = c >= 0.0;
            r.note = Some("verdict from the sign of the spectral-form coefficient".into());
        }
        Route::FTable if k2 == 1 => {
            r.note = Some("minimizer is uniform point".into());
        }
        Route::FTable => {}
    }
    Ok(r)
}

/// One row per n in `lo..=hi` with C = 1.
pub fn f_sign_table(lo: usize, hi: usize) -> Result<Vec<TableRow>, SequenceError> {
    if lo < 4 || lo > hi {
        return Err(SequenceError::BadRange { lo, hi });
    }
    (lo..=hi).map(row).collect()
}
