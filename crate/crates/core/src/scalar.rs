use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating point scalar the tensor algebra is generic over: f32 or f64.
pub trait Scalar: Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static {
    /// Converts an f64 literal. Panics only on values the type cannot hold at all.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal out of range for scalar type")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("integer out of range for scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Convergence floor for iterative routines: never tighter than a few ulps.
    fn floor_tol(requested: f64) -> Self {
        let eps = Self::epsilon().as_f64();
        Self::of(requested.max(8.0 * eps))
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_tol_respects_precision() {
        assert_eq!(f64::floor_tol(1e-13), 1e-13);
        assert!(f32::floor_tol(1e-13) > 1e-7);
    }
}
