//! Minimization of `f(λ) = B·C·Σλ² + Σλ³` over nondecreasing sequences with
//! fixed total `C` and head sum `a = Σ_{i ≤ k₂} λ_i`.

mod brute;
mod problem;
mod table;

use thiserror::Error;

pub use brute::{a_scan, brute_min, check_cell, is_feasible, BruteMode, BruteResult, CellCheck, DEFAULT_RESOLUTION};
pub use problem::{
    candidate_points, dimension_b, dimension_size, f_eval, g_profile, head_size_coefficient, CandidatePoint, GProfile,
    SeqProblem,
};
pub use table::{f_sign_table, hypothesis_k2, Route, TableRow};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SequenceError {
    #[error("bad problem: {0}")]
    BadProblem(String),
    #[error("lattice enumeration exceeded the budget of {budget} points")]
    BudgetExceeded { budget: usize },
    #[error("bad range {lo}..{hi}: need 4 <= lo <= hi")]
    BadRange { lo: usize, hi: usize },
}
