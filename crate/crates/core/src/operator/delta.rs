use super::OperatorError;
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaTest<T> {
    pub value: T,
    pub holds: bool,
}

/// `Σ_{α ≤ [δ]} λ_α + (δ − [δ]) λ_{[δ]+1}` on a nondecreasing spectrum and
/// whether it is nonnegative.
pub fn delta_nonnegative<T: Scalar>(eigenvalues: &[T], delta: f64) -> Result<DeltaTest<T>, OperatorError> {
    if !(delta >= 1.0) || !delta.is_finite() {
        return Err(OperatorError::BadDelta(format!("delta = {delta} must be >= 1")));
    }
    let whole = delta.floor() as usize;
    let frac = delta - delta.floor();
    let m = eigenvalues.len();
    if whole > m || (frac > 0.0 && whole + 1 > m) {
        return Err(OperatorError::BadDelta(format!("delta = {delta} exceeds spectrum size {m}")));
    }
    let mut value: T = eigenvalues[..whole].iter().copied().sum();
    if frac > 0.0 {
        value += T::of(frac) * eigenvalues[whole];
    }
    Ok(DeltaTest { value, holds: value >= T::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractional_interpolation() {
        let sp = [-1.0f64, 0.4, 0.4, 0.4];
        let r = delta_nonnegative(&sp, 2.5).unwrap();
        assert!((r.value + 0.4).abs() < 1e-15);
        assert!(!r.holds);
    }

    #[test]
    fn integer_delta_is_partial_sum() {
        let sp = [-1.0, 0.25, 2.0];
        assert_eq!(delta_nonnegative(&sp, 2.0).unwrap().value, -0.75);
        assert!(delta_nonnegative(&sp, 3.0).unwrap().holds);
    }

    #[test]
    fn bad_delta() {
        assert!(delta_nonnegative(&[1.0, 2.0], 0.5).is_err());
        assert!(delta_nonnegative(&[1.0, 2.0], 2.5).is_err());
        assert!(delta_nonnegative(&[1.0, 2.0], f64::NAN).is_err());
        assert!(delta_nonnegative(&[1.0, 2.0], 2.0).is_ok());
    }
}
