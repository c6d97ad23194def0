//! Algebraic curvature tensors and the curvature operator of the second kind.
//!
//! The crate builds curvature tensors in an orthonormal frame, assembles the
//! operators R̂, R̃ and R° as symmetric matrices, and evaluates the algebraic
//! identities, eigenvalue bounds and constrained minimization problems that
//! appear in Bochner-type rigidity arguments. Every identity is checked by two
//! independent code paths.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix `f64`, which is what the identity suite and CLI use.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod curvature;
pub mod extremal;
pub mod identities;
pub mod operator;
pub mod scalar;
pub mod seed;
pub mod sequence;

pub use scalar::Scalar;

pub type CurvTensor = curvature::Curvature<f64>;
pub type Sym2 = curvature::SymTensor<f64>;
pub type TraceFreeSym2 = curvature::TraceFree<f64>;
pub type DecomposedCurvature = curvature::Decomposition<f64>;
pub type Sym2Basis = operator::Sym2Basis<f64>;
pub type OperatorMatrix = operator::OperatorMatrix<f64>;
pub type Spectrum = operator::Spectrum<f64>;
pub type ScalarInvariants = operator::ScalarInvariants<f64>;
pub type WeightedSequence = extremal::WeightedSequence<f64>;
pub type SeqProblem = sequence::SeqProblem<f64>;
pub type CandidatePoint = sequence::CandidatePoint<f64>;
