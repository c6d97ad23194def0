//! Bases of S², S₀² and Λ², the curvature operators R̂, R̃, R° as symmetric
//! matrices, their spectra, and the cubic contractions built from them.

mod apply;
mod assemble;
mod basis;
mod contraction;
mod delta;
mod eigen;
mod invariants;
mod spectrum;

use thiserror::Error;

pub use apply::{apply_second_kind, apply_sym2};
pub use assemble::{
    op_first_kind, op_second_kind, op_second_kind_by_action, op_second_kind_in, op_tilde, quadratic_form, OperatorKind,
    OperatorMatrix,
};
pub use basis::{wedge_pairs, BasisKind, Sym2Basis};
pub use contraction::{
    alpha_beta, bianchi_contraction_residuals, bianchi_contractions, cubic_contraction, ricci_contraction,
    BianchiContractions,
};
pub use delta::{delta_nonnegative, DeltaTest};
pub use eigen::{jacobi_eigh, matrix_hash, Eigh};
pub use invariants::ScalarInvariants;
pub use spectrum::{eigen_residuals, spectrum, Spectrum, SpectrumJson, Traces};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OperatorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (matrix hash {hash:016x})")]
    ConvergenceFailure { sweeps: usize, hash: u64 },
    #[error("bad delta: {0}")]
    BadDelta(String),
    #[error("basis is not orthonormal (max Gram residual {residual:e})")]
    NotOrthonormal { residual: f64 },
    #[error("bad contraction pattern `{0}`")]
    BadPattern(String),
}
