//! Residual reports for the algebraic identities relating the spectrum of
//! R° to curvature contractions.
//!
//! The Laplacian pairing ⟨ΔR, R⟩ never appears as a differential quantity;
//! it is always its algebraic value [`bochner_value`] for a harmonic tensor.

mod checks;
mod report;
mod suite;

use thiserror::Error;

use crate::curvature::CurvatureError;
use crate::operator::OperatorError;

pub use checks::{
    bianchi_checks, bochner_value, eigen_expansion, einstein_chain, gap_coefficient, gap_forms, jack_parker_residual,
    low_dim_chain, power_mean_gaps, quadratic_form_check, trace_checks, trace_one_check, weighted_eigen_sum,
    weyl_basis_sum_check, weyl_cubic_chain, weyl_derivation_bound, DerivationBound, EinsteinProfile, Gaps, WeylGram,
};
pub use report::{relative_residual, Context, IdentityReport, Relation, ReportKind};
pub use suite::{
    derivation_bound_sweep, random_unit_trace_free, run_suite, summarize, SuiteConfig, SummaryRow, DERIVATION_SAMPLES,
    JACK_PARKER_BREAK, JACK_PARKER_FRACTION, JACK_PARKER_TOL,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IdentityError {
    #[error("tensor is not Einstein (|E| = {norm:e})")]
    NotEinstein { norm: f64 },
    #[error("tensor is not of Weyl type (|Ric| = {norm:e})")]
    NotWeyl { norm: f64 },
    #[error("Weyl tensor is zero")]
    ZeroWeyl,
    #[error("identity only holds for n in {allowed:?}, got n = {n}")]
    WrongDim { n: usize, allowed: &'static [usize] },
    #[error("expected {expected} eigenvalues, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}
