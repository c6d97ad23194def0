use super::ExtremalError;
use crate::Scalar;

/// Nondecreasing `λ` with nonnegative weights `θ`, `Θ = max θ` and
/// `k = ⌊Σθ / Θ⌋` (`k = 0` when every weight vanishes).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSequence<T> {
    lambdas: Vec<T>,
    thetas: Vec<T>,
    theta_max: T,
    k: usize,
}

impl<T: Scalar> WeightedSequence<T> {
    pub fn new(lambdas: Vec<T>, thetas: Vec<T>) -> Result<Self, ExtremalError> {
        if lambdas.is_empty() {
            return Err(ExtremalError::EmptyInput);
        }
        if lambdas.len() != thetas.len() {
            return Err(ExtremalError::LengthMismatch(lambdas.len(), thetas.len()));
        }
        if lambdas.windows(2).any(|w| !(w[0] <= w[1])) {
            return Err(ExtremalError::NotSorted);
        }
        if thetas.iter().any(|t| !(t.is_finite() && *t >= T::zero())) {
            return Err(ExtremalError::BadWeights);
        }
        let theta_max = thetas.iter().copied().fold(T::zero(), T::max);
        let k = if theta_max > T::zero() {
            let total: T = thetas.iter().copied().sum();
            (total / theta_max).floor().to_usize().unwrap_or(0).min(lambdas.len())
        } else {
            0
        };
        Ok(Self { lambdas, thetas, theta_max, k })
    }

    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }

    pub fn thetas(&self) -> &[T] {
        &self.thetas
    }

    pub fn theta_max(&self) -> T {
        self.theta_max
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Guarantee<T> {
    /// `Σ_{i ≤ k} λ_i ≥ 0`.
    pub premise: bool,
    /// `Σ λ_i θ_i`.
    pub conclusion_value: T,
}

impl<T: Scalar> Guarantee<T> {
    /// The implication premise ⇒ value ≥ −tol.
    pub fn implication_holds(&self, tol: T) -> bool {
        !self.premise || self.conclusion_value >= -tol
    }
}

/// If the `k` smallest λ sum to something nonnegative, so does `Σ λ_i θ_i`.
pub fn weighted_sum_guarantee<T: Scalar>(ws: &WeightedSequence<T>) -> Guarantee<T> {
    let head: T = ws.lambdas[..ws.k].iter().copied().sum();
    let value = ws.lambdas.iter().zip(&ws.thetas).map(|(&l, &t)| l * t).sum();
    Guarantee { premise: head >= T::zero(), conclusion_value: value }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let ws = WeightedSequence::new(vec![-1.0, 2.0, 3.0], vec![1.0, 1.0, 0.5]).unwrap();
        assert_eq!(ws.theta_max(), 1.0);
        assert_eq!(ws.k(), 2);
        let g = weighted_sum_guarantee(&ws);
        assert!(g.premise);
        assert_eq!(g.conclusion_value, 2.5);
    }

    #[test]
    fn zero_weights_are_vacuous() {
        let ws = WeightedSequence::new(vec![-1.0, 2.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(ws.k(), 0);
        let g = weighted_sum_guarantee(&ws);
        assert!(g.premise);
        assert_eq!(g.conclusion_value, 0.0);
    }

    #[test]
    fn validation() {
        assert_eq!(WeightedSequence::<f64>::new(vec![], vec![]), Err(ExtremalError::EmptyInput));
        assert_eq!(WeightedSequence::new(vec![2.0, 1.0], vec![1.0, 1.0]), Err(ExtremalError::NotSorted));
        assert_eq!(WeightedSequence::new(vec![1.0, 2.0], vec![-1.0, 1.0]), Err(ExtremalError::BadWeights));
        assert!(matches!(WeightedSequence::new(vec![1.0], vec![1.0, 1.0]), Err(ExtremalError::LengthMismatch(1, 2))));
    }
}
