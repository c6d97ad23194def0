use serde::{Deserialize, Serialize};

use super::apply::apply_second_kind;
use super::assemble::{OperatorKind, OperatorMatrix};
use super::eigen::jacobi_eigh;
use super::OperatorError;
use crate::curvature::{Curvature, SymTensor};
use crate::Scalar;

/// Nondecreasing eigenvalues with eigentensors reconstituted from the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    pub kind: OperatorKind,
    pub n: usize,
    pub eigenvalues: Vec<T>,
    /// Empty for R̂.
    pub eigentensors: Vec<SymTensor<T>>,
    /// `ω_α = λ_α − s/(n(n−1))`, set by [`Spectrum::with_weyl_shift`].
    pub weyl_shifted: Option<Vec<T>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Traces {
    pub tr1: f64,
    pub tr2: f64,
    pub tr3: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub size: usize,
    pub eigenvalues: Vec<f64>,
    pub traces: Traces,
    pub einstein: bool,
}

pub fn spectrum<T: Scalar>(m: &OperatorMatrix<T>) -> Result<Spectrum<T>, OperatorError> {
    let size = m.size();
    let e = jacobi_eigh(m.entries(), size)?;
    let eigentensors = match m.basis() {
        Some(basis) => (0..size)
            .map(|a| {
                let col: Vec<T> = (0..size).map(|b| e.vectors[b * size + a]).collect();
                basis.combine(&col)
            })
            .collect(),
        None => Vec::new(),
    };
    Ok(Spectrum { kind: m.kind, n: m.dim(), eigenvalues: e.values, eigentensors, weyl_shifted: None })
}

impl<T: Scalar> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Σ λ_α^k.
    pub fn power_sum(&self, k: i32) -> T {
        self.eigenvalues.iter().map(|&l| l.powi(k)).sum()
    }

    pub fn traces(&self) -> Traces {
        Traces { tr1: self.power_sum(1).as_f64(), tr2: self.power_sum(2).as_f64(), tr3: self.power_sum(3).as_f64() }
    }

    pub fn with_weyl_shift(mut self, s: T) -> Self {
        let nn = T::of_usize(self.n);
        let shift = s / (nn * (nn - T::one()));
        self.weyl_shifted = Some(self.eigenvalues.iter().map(|&l| l - shift).collect());
        self
    }

    pub fn to_json(&self, einstein: bool) -> SpectrumJson {
        SpectrumJson {
            n: self.n,
            size: self.len(),
            eigenvalues: self.eigenvalues.iter().map(|v| v.as_f64()).collect(),
            traces: self.traces(),
            einstein,
        }
    }
}

/// max_α ‖R°S^α − λ_α S^α‖ / (1 + |λ_α|) with R° applied through its vector
/// action (projected to S₀² for the second kind).
pub fn eigen_residuals<T: Scalar>(r: &Curvature<T>, sp: &Spectrum<T>) -> T {
    let mut worst = T::zero();
    for (lam, s) in sp.eigenvalues.iter().zip(&sp.eigentensors) {
        let mut img = apply_second_kind(r, s);
        if sp.kind == OperatorKind::Second {
            img = img.trace_free_part();
        }
        let res = (&img - &s.scale(*lam)).norm() / (T::one() + lam.abs());
        worst = worst.max(res);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{random_curvature, random_einstein, unit_curvature};
    use crate::operator::{op_first_kind, op_second_kind, op_tilde};

    #[test]
    fn unit_sphere_spectrum_is_flat_one() {
        let sp = spectrum(&op_second_kind(&unit_curvature::<f64>(4))).unwrap();
        assert_eq!(sp.len(), 9);
        assert!(sp.eigenvalues.iter().all(|&l| (l - 1.0).abs() < 1e-14));
    }

    #[test]
    fn einstein_residuals_small() {
        let r = random_einstein::<f64>(6, 3.0, 5).unwrap();
        let sp = spectrum(&op_second_kind(&r)).unwrap();
        assert!(eigen_residuals(&r, &sp) < 1e-8);
        let w = sp.with_weyl_shift(3.0).weyl_shifted.unwrap();
        assert!(w.iter().sum::<f64>().abs() < 1e-8);
    }

    #[test]
    fn non_einstein_residuals_small() {
        let r = random_curvature::<f64>(5, 5);
        let sp = spectrum(&op_second_kind(&r)).unwrap();
        assert!(eigen_residuals(&r, &sp) < 1e-8);
        assert!(sp.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let tilde = spectrum(&op_tilde(&r)).unwrap();
        assert!(eigen_residuals(&r, &tilde) < 1e-8);
        assert!(spectrum(&op_first_kind(&r)).unwrap().eigentensors.is_empty());
    }

    #[test]
    fn eigentensors_orthonormal_trace_free() {
        let r = random_curvature::<f64>(4, 8);
        let sp = spectrum(&op_second_kind(&r)).unwrap();
        for (a, sa) in sp.eigentensors.iter().enumerate() {
            assert!(sa.trace().abs() < 1e-12);
            for (b, sb) in sp.eigentensors.iter().enumerate() {
                let e = if a == b { 1.0 } else { 0.0 };
                assert!((sa.dot(sb) - e).abs() < 1e-12);
            }
        }
    }
}
