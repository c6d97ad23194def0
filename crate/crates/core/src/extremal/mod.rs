//! Weighted-sum sign criterion and the constrained maxima that bound
//! `|SW|²` for trace-free S.

mod lagrange;
mod weighted;

use thiserror::Error;

pub use lagrange::{
    case_extremum_closed, case_extremum_numeric, k1_ratio_check, lagrange_residual, NumericMax, Pattern, RatioCheck,
    DEFAULT_STARTS,
};
pub use weighted::{weighted_sum_guarantee, Guarantee, WeightedSequence};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtremalError {
    #[error("empty input")]
    EmptyInput,
    #[error("lambdas and thetas differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("lambdas must be nondecreasing")]
    NotSorted,
    #[error("weights must be nonnegative and finite")]
    BadWeights,
    #[error("unknown pattern `{0}`")]
    BadPattern(String),
    #[error("need n >= {min}, got {n}")]
    BadDim { n: usize, min: usize },
    #[error("no start converged")]
    OptFailure,
}
