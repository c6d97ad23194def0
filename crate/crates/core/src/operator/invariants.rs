use serde::Serialize;

use super::assemble::op_second_kind;
use super::contraction::alpha_beta;
use super::OperatorError;
use crate::curvature::Curvature;
use crate::Scalar;

/// Scalar invariants of one curvature tensor (α, β taken with T = R).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalarInvariants<T> {
    pub s: T,
    pub norm_r_sq: T,
    pub norm_w_sq: T,
    pub alpha: T,
    pub beta: T,
    /// tr R°, tr R°², tr R°³ as matrix traces.
    pub tr1: T,
    pub tr2: T,
    pub tr3: T,
}

impl<T: Scalar> ScalarInvariants<T> {
    pub fn compute(r: &Curvature<T>) -> Result<Self, OperatorError> {
        let d = r.decompose();
        let (alpha, beta) = alpha_beta(r, r)?;
        let m = op_second_kind(r);
        Ok(Self {
            s: d.scalar,
            norm_r_sq: r.norm_sq(),
            norm_w_sq: d.weyl.norm_sq(),
            alpha,
            beta,
            tr1: m.trace(),
            tr2: m.trace_pow(2),
            tr3: m.trace_pow(3),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::unit_curvature;

    #[test]
    fn sphere_invariants() {
        let inv = ScalarInvariants::compute(&unit_curvature::<f64>(4)).unwrap();
        assert!((inv.s - 12.0).abs() < 1e-13);
        assert!((inv.norm_r_sq - 24.0).abs() < 1e-13);
        assert!(inv.norm_w_sq < 1e-26);
        for tr in [inv.tr1, inv.tr2, inv.tr3] {
            assert!((tr - 9.0).abs() < 1e-12);
        }
    }
}
