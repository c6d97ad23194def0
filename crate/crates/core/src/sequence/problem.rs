use serde::Serialize;

use super::SequenceError;
use crate::Scalar;

/// `N = (n−1)(n+2)/2`, the dimension of S₀².
pub fn dimension_size(n: usize) -> usize {
    (n - 1) * (n + 2) / 2
}

/// `B = 2(n²−11n+4)/(3n(n−1)(n+2))`.
pub fn dimension_b<T: Scalar>(n: usize) -> T {
    let n = T::of_usize(n);
    T::of(2.0) * (n * n - T::of(11.0) * n + T::of(4.0)) / (T::of(3.0) * n * (n - T::one()) * (n + T::of(2.0)))
}

/// `2(n²−8n+4)/(3n(n−1)(n+2))`, the coefficient that keeps the two-point
/// candidate reduction valid for negative B.
pub fn head_size_coefficient(n: usize) -> (f64, bool) {
    let nf = n as f64;
    let v = 2.0 * (nf * nf - 8.0 * nf + 4.0) / (3.0 * nf * (nf - 1.0) * (nf + 2.0));
    (v, v > 0.0)
}

/// `B·C·Σλ² + Σλ³`.
pub fn f_eval<T: Scalar>(lambdas: &[T], b: T, c: T) -> T {
    let (s2, s3) = lambdas.iter().fold((T::zero(), T::zero()), |(s2, s3), &l| (s2 + l * l, s3 + l * l * l));
    b * c * s2 + s3
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeqProblem<T> {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub k2: usize,
    pub c: T,
    pub a: T,
    pub b: T,
    pub n: Option<usize>,
}

impl<T: Scalar> SeqProblem<T> {
    pub fn new(big_n: usize, k2: usize, c: T, a: T, b: T) -> Result<Self, SequenceError> {
        let p = Self { big_n, k2, c, a, b, n: None };
        p.validate()?;
        Ok(p)
    }

    /// N, B from the dimension; `a = 0`.
    pub fn from_dimension(n: usize, k2: usize, c: T) -> Result<Self, SequenceError> {
        if n < 4 {
            return Err(SequenceError::BadProblem(format!("n = {n} < 4")));
        }
        let p = Self { big_n: dimension_size(n), k2, c, a: T::zero(), b: dimension_b(n), n: Some(n) };
        p.validate()?;
        Ok(p)
    }

    pub fn with_a(mut self, a: T) -> Result<Self, SequenceError> {
        self.a = a;
        self.validate()?;
        Ok(self)
    }

    /// Upper end `k₂C/N` of the admissible head sums.
    pub fn a_max(&self) -> T {
        T::of_usize(self.k2) * self.c / T::of_usize(self.big_n)
    }

    fn validate(&self) -> Result<(), SequenceError> {
        let bad = |m: String| Err(SequenceError::BadProblem(m));
        if self.k2 < 1 || self.k2 >= self.big_n {
            return bad(format!("need 1 <= k2 < N, got k2 = {}, N = {}", self.k2, self.big_n));
        }
        if !(self.c >= T::zero()) || !self.c.is_finite() {
            return bad(format!("C = {} must be finite and nonnegative", self.c));
        }
        if !self.b.is_finite() {
            return bad("B must be finite".into());
        }
        let slack = T::of(1e-12) * (T::one() + self.c);
        if !(self.a >= -slack && self.a <= self.a_max() + slack) {
            return bad(format!("a = {} outside [0, k2 C / N]", self.a));
        }
        Ok(())
    }
}

/// A named candidate minimizer. `m = 0` is the uniform point; `m ≥ 1` has its
/// first `m` entries equal to `a_m/m` and the rest equal to `C/(N−k₂)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidatePoint<T> {
    pub m: usize,
    pub lambdas: Vec<T>,
    pub f_value: T,
    pub a_m: T,
}

fn block_point<T: Scalar>(big_n: usize, k2: usize, c: T, m: usize) -> (Vec<T>, T) {
    let tail = c / T::of_usize(big_n - k2);
    let a_m = -T::of_usize(k2 - m) * tail;
    let head = a_m / T::of_usize(m);
    let mut v = vec![head; m];
    v.resize(big_n, tail);
    (v, a_m)
}

/// Uniform point, the zero block (`m = k₂`), then `m = 1..k₂−1`. All
/// non-uniform candidates have head sum `a = 0`.
pub fn candidate_points<T: Scalar>(
    big_n: usize,
    k2: usize,
    c: T,
    b: T,
) -> Result<Vec<CandidatePoint<T>>, SequenceError> {
    SeqProblem::new(big_n, k2, c, T::zero(), b)?;
    let uniform = vec![c / T::of_usize(big_n); big_n];
    let mut out = vec![CandidatePoint {
        m: 0,
        f_value: f_eval(&uniform, b, c),
        a_m: T::of_usize(k2) * c / T::of_usize(big_n),
        lambdas: uniform,
    }];
    for m in std::iter::once(k2).chain(1..k2) {
        let (lambdas, a_m) = block_point(big_n, k2, c, m);
        out.push(CandidatePoint { m, f_value: f_eval(&lambdas, b, c), a_m, lambdas });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GProfile<T> {
    /// `(m, g(x_m))` for `m = 1..k₂`, from the closed form.
    pub g_values: Vec<(usize, T)>,
    /// `(m, g(x_m))` from `f_eval` minus the shared tail.
    pub g_from_f: Vec<(usize, T)>,
    /// `g′(m)` at `m = 1..k₂`.
    pub g_prime: Vec<T>,
    pub g_prime_sign_changes: usize,
    pub argmin_m: usize,
}

/// Head part `g(x_m)` of `f` at the block candidates, its derivative in m
/// and the discrete minimizer.
pub fn g_profile<T: Scalar>(big_n: usize, k2: usize, c: T, b: T) -> Result<GProfile<T>, SequenceError> {
    SeqProblem::new(big_n, k2, c, T::zero(), b)?;
    let nk = T::of_usize(big_n - k2);
    let t = c / nk;
    let k = T::of_usize(k2);
    let mut g_values = Vec::with_capacity(k2);
    let mut g_from_f = Vec::with_capacity(k2);
    let mut g_prime = Vec::with_capacity(k2);
    let tail: T = T::of_usize(big_n - k2) * (b * c * t * t + t * t * t);
    for m in 1..=k2 {
        let mf = T::of_usize(m);
        let j = k - mf;
        let g = b * c * t * t * (k * k / mf - k) - t * t * t * (j * j * j / (mf * mf) - j);
        g_values.push((m, g));
        let (lambdas, _) = block_point(big_n, k2, c, m);
        g_from_f.push((m, f_eval(&lambdas, b, c) - tail));
        let gp = -(k * k * c * c * c / (mf * mf * mf * nk * nk * nk)) * ((b * nk + T::of(3.0)) * mf - T::of(2.0) * k);
        g_prime.push(gp);
    }
    let g_prime_sign_changes = g_prime
        .windows(2)
        .filter(|w| (w[0] > T::zero() && w[1] < T::zero()) || (w[0] < T::zero() && w[1] > T::zero()))
        .count();
    let argmin_m =
        g_values.iter().copied().reduce(|best, x| if x.1 < best.1 { x } else { best }).map(|x| x.0).expect("k2 >= 1");
    Ok(GProfile { g_values, g_from_f, g_prime, g_prime_sign_changes, argmin_m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        assert_eq!(f_eval(&[-1.0, 1.0, 1.0], 1.0, 1.0), 4.0);
        assert_eq!(f_eval(&[0.0; 4], 2.0, 1.0), 0.0);
        let n = 9.0f64;
        let u = vec![1.0 / n; 9];
        assert!((f_eval(&u, 0.3, 1.0) - (0.3 / n + 1.0 / (n * n))).abs() < 1e-15);
    }

    #[test]
    fn candidates_for_single_head() {
        let c = candidate_points(9, 1, 1.0f64, 0.1).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c[0].lambdas.iter().all(|&x| (x - 1.0 / 9.0).abs() < 1e-15));
        assert_eq!(c[1].lambdas[0], 0.0);
        assert!(c[1].lambdas[1..].iter().all(|&x| (x - 0.125).abs() < 1e-15));
    }

    #[test]
    fn candidates_satisfy_constraints() {
        let c = candidate_points(65, 3, 1.0, dimension_b(11)).unwrap();
        assert_eq!(c.len(), 4);
        for p in &c {
            assert!(p.lambdas.windows(2).all(|w| w[0] <= w[1]));
            assert!((p.lambdas.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            let head: f64 = p.lambdas[..3].iter().sum();
            let want = if p.m == 0 { 3.0 / 65.0 } else { 0.0 };
            assert!((head - want).abs() < 1e-12);
        }
        assert!((c[2].lambdas[0] + 2.0 / 62.0).abs() < 1e-15);
    }

    #[test]
    fn flat_candidates_vanish() {
        for p in candidate_points(10, 2, 0.0, 0.5).unwrap() {
            assert!(p.lambdas.iter().all(|&x| x == 0.0));
            assert_eq!(p.f_value, 0.0);
        }
    }

    #[test]
    fn bad_problems() {
        assert!(candidate_points(5, 0, 1.0, 0.1).is_err());
        assert!(candidate_points(5, 5, 1.0, 0.1).is_err());
        assert!(candidate_points(5, 1, -1.0, 0.1).is_err());
        assert!(SeqProblem::new(5, 1, 1.0, 0.5, 0.1).is_err());
    }

    #[test]
    fn g_profile_dual_paths_agree() {
        let p = g_profile(65, 3, 1.0, dimension_b::<f64>(11)).unwrap();
        for ((_, a), (_, b)) in p.g_values.iter().zip(&p.g_from_f) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(p.argmin_m == 1 || p.argmin_m == 3);
        assert_eq!(g_profile(9, 1, 1.0, 0.2).unwrap().argmin_m, 1);
    }

    #[test]
    fn head_size_coefficient_signs() {
        assert!((head_size_coefficient(8).0 - 8.0 / 1680.0).abs() < 1e-15);
        assert!(!head_size_coefficient(7).1);
        assert!((head_size_coefficient(10).0 - 48.0 / 3240.0).abs() < 1e-15);
    }
}
