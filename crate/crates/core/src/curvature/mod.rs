//! Algebraic curvature tensors in an orthonormal frame.
//!
//! Components are `R_ijkl` with metric `g_ij = δ_ij`. The sign convention
//! makes the unit sphere `R_ijkl = δ_ik δ_jl − δ_il δ_jk`, Ricci is
//! `Ric_jl = Σ_i R_ijil` and the scalar curvature `s = Σ_j Ric_jj`.

mod decompose;
mod io;
mod model;
mod random;
mod tensor;

use std::ops::{Add, Mul, Sub};

use thiserror::Error;

use crate::Scalar;

pub use decompose::Decomposition;
pub use io::TensorFile;
pub use model::ModelSpace;
pub use random::{random_curvature, random_einstein, random_raw, random_weyl};
pub use tensor::{DenseTensor, SymTensor, TraceFree};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurvatureError {
    #[error("expected {expected} components, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("symmetry {identity} violated (max residual {residual:e})")]
    SymmetryViolation { identity: Symmetry, residual: f64 },
    #[error("first Bianchi identity violated (max residual {residual:e})")]
    BianchiViolation { residual: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("unsupported dimension {n}: {reason}")]
    UnsupportedDim { n: usize, reason: &'static str },
    #[error("unknown model space `{0}`")]
    UnknownModel(String),
    #[error("bad model parameters: {0}")]
    BadParams(String),
    #[error("matrix is not symmetric (max residual {residual:e})")]
    NotSymmetric { residual: f64 },
    #[error("tensor is not trace free (trace {trace:e})")]
    NotTraceFree { trace: f64 },
    #[error("tensor file: {0}")]
    Format(String),
}

/// The pair symmetries of a curvature tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// R_ijkl = −R_jikl
    FirstPair,
    /// R_ijkl = −R_ijlk
    SecondPair,
    /// R_ijkl = R_klij
    PairExchange,
}

impl std::fmt::Display for Symmetry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Symmetry::FirstPair => "R_ijkl = -R_jikl",
            Symmetry::SecondPair => "R_ijkl = -R_ijlk",
            Symmetry::PairExchange => "R_ijkl = R_klij",
        })
    }
}

/// Dimension of the underlying Euclidean space; at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dim(usize);

impl Dim {
    pub fn new(n: usize) -> Result<Self, CurvatureError> {
        if n < 3 {
            return Err(CurvatureError::UnsupportedDim { n, reason: "need n >= 3" });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// A rank-4 tensor with all curvature symmetries and first Bianchi.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature<T> {
    t: DenseTensor<T>,
}

/// Worst residuals of the four defining identities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetryResiduals<T> {
    pub first_pair: T,
    pub second_pair: T,
    pub pair_exchange: T,
    pub bianchi: T,
}

pub fn symmetry_residuals<T: Scalar>(t: &DenseTensor<T>) -> SymmetryResiduals<T> {
    let n = t.dim();
    let mut r = SymmetryResiduals {
        first_pair: T::zero(),
        second_pair: T::zero(),
        pair_exchange: T::zero(),
        bianchi: T::zero(),
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = t.at4(i, j, k, l);
                    r.first_pair = r.first_pair.max((v + t.at4(j, i, k, l)).abs());
                    r.second_pair = r.second_pair.max((v + t.at4(i, j, l, k)).abs());
                    r.pair_exchange = r.pair_exchange.max((v - t.at4(k, l, i, j)).abs());
                    let b = v + t.at4(i, k, l, j) + t.at4(i, l, j, k);
                    r.bianchi = r.bianchi.max(b.abs());
                }
            }
        }
    }
    r
}

impl<T: Scalar> Curvature<T> {
    pub fn zeros(n: usize) -> Self {
        Self { t: DenseTensor::zeros(n, 4) }
    }

    /// Validates a raw n⁴ array. Residuals are compared against
    /// `tol · (1 + max|raw|)`; pair symmetries are checked before Bianchi.
    pub fn new(n: usize, raw: Vec<T>, tol: T) -> Result<Self, CurvatureError> {
        let t = DenseTensor::from_vec(n, 4, raw)?;
        Self::from_dense(t, tol)
    }

    pub fn from_dense(t: DenseTensor<T>, tol: T) -> Result<Self, CurvatureError> {
        if t.rank() != 4 {
            return Err(CurvatureError::ShapeMismatch { expected: t.dim().pow(4), found: t.as_slice().len() });
        }
        let bound = tol * (T::one() + t.max_abs());
        let r = symmetry_residuals(&t);
        for (identity, residual) in [
            (Symmetry::FirstPair, r.first_pair),
            (Symmetry::SecondPair, r.second_pair),
            (Symmetry::PairExchange, r.pair_exchange),
        ] {
            if residual > bound {
                return Err(CurvatureError::SymmetryViolation { identity, residual: residual.as_f64() });
            }
        }
        if r.bianchi > bound {
            return Err(CurvatureError::BianchiViolation { residual: r.bianchi.as_f64() });
        }
        Ok(Self { t })
    }

    /// Orthogonal projection of an arbitrary n⁴ array onto the space of
    /// algebraic curvature tensors.
    pub fn project(raw: &DenseTensor<T>) -> Self {
        assert_eq!(raw.rank(), 4, "projection needs a rank-4 tensor");
        let half = T::of(0.5);
        let third = T::of(1.0 / 3.0);
        // antisymmetrize (i,j), then (k,l), then symmetrize under pair exchange
        let x = &(raw - &raw.permuted(&[1, 0, 2, 3])) * half;
        let x = &(&x - &x.permuted(&[0, 1, 3, 2])) * half;
        let x = &(&x + &x.permuted(&[2, 3, 0, 1])) * half;
        // b(X)_ijkl = (X_ijkl + X_iklj + X_iljk) / 3
        let cyc1 = x.permuted(&[0, 2, 3, 1]);
        let cyc2 = x.permuted(&[0, 3, 1, 2]);
        let b = &(&(&x + &cyc1) + &cyc2) * third;
        Self { t: &x - &b }
    }

    /// Wraps a tensor the caller guarantees is a curvature tensor.
    pub(crate) fn from_dense_unchecked(t: DenseTensor<T>) -> Self {
        Self { t }
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        self.t.at4(i, j, k, l)
    }

    pub fn tensor(&self) -> &DenseTensor<T> {
        &self.t
    }

    pub fn into_tensor(self) -> DenseTensor<T> {
        self.t
    }

    pub fn dot(&self, other: &Self) -> T {
        self.t.dot(&other.t)
    }

    /// |R|² = Σ R_ijkl².
    pub fn norm_sq(&self) -> T {
        self.t.norm_sq()
    }

    pub fn ricci(&self) -> SymTensor<T> {
        let n = self.dim();
        SymTensor::from_fn(n, |j, l| (0..n).map(|i| self.get(i, j, i, l)).sum())
    }

    pub fn scalar(&self) -> T {
        self.ricci().trace()
    }

    pub fn residuals(&self) -> SymmetryResiduals<T> {
        symmetry_residuals(&self.t)
    }

    pub fn cast<U: Scalar>(&self) -> Curvature<U> {
        Curvature { t: self.t.cast() }
    }
}

impl<T: Scalar> Add for &Curvature<T> {
    type Output = Curvature<T>;
    fn add(self, rhs: Self) -> Curvature<T> {
        Curvature { t: &self.t + &rhs.t }
    }
}

impl<T: Scalar> Sub for &Curvature<T> {
    type Output = Curvature<T>;
    fn sub(self, rhs: Self) -> Curvature<T> {
        Curvature { t: &self.t - &rhs.t }
    }
}

impl<T: Scalar> Mul<T> for &Curvature<T> {
    type Output = Curvature<T>;
    fn mul(self, c: T) -> Curvature<T> {
        Curvature { t: self.t.scale(c) }
    }
}

/// Kulkarni–Nomizu product
/// `(A∧B)_ijkl = A_ik B_jl + A_jl B_ik − A_il B_jk − A_jk B_il`.
pub fn kulkarni_nomizu<T: Scalar>(a: &SymTensor<T>, b: &SymTensor<T>) -> Result<Curvature<T>, CurvatureError> {
    if a.dim() != b.dim() {
        return Err(CurvatureError::DimMismatch { left: a.dim(), right: b.dim() });
    }
    let t = DenseTensor::from_fn4(a.dim(), |i, j, k, l| {
        a.get(i, k) * b.get(j, l) + a.get(j, l) * b.get(i, k) - a.get(i, l) * b.get(j, k) - a.get(j, k) * b.get(i, l)
    });
    Ok(Curvature { t })
}

/// (1/2) g∧g, the unit sphere: `δ_ik δ_jl − δ_il δ_jk`.
pub fn unit_curvature<T: Scalar>(n: usize) -> Curvature<T> {
    let g = SymTensor::identity(n);
    let kn = kulkarni_nomizu(&g, &g).expect("same dimension");
    &kn * T::of(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron(i: usize, j: usize) -> f64 {
        if i == j {
            1.0
        } else {
            0.0
        }
    }

    #[test]
    fn zero_tensor_is_valid() {
        let c = Curvature::<f64>::new(4, vec![0.0; 256], 1e-12).unwrap();
        assert_eq!(c.norm_sq(), 0.0);
        assert_eq!(c.scalar(), 0.0);
    }

    #[test]
    fn gg_components_are_accepted() {
        let n = 4;
        let raw = DenseTensor::from_fn4(n, |i, j, k, l| 2.0 * (kron(i, k) * kron(j, l) - kron(i, l) * kron(j, k)));
        assert!(Curvature::from_dense(raw, 1e-12).is_ok());
    }

    #[test]
    fn lone_component_fails_pair_symmetry_first() {
        let mut raw = vec![0.0; 256];
        // R_1212 with 1-based labels -> (0,1,0,1)
        raw[(4 + 1) * 4 * 4 + 1] = 1.0;
        let err = Curvature::<f64>::new(4, raw, 1e-12).unwrap_err();
        assert!(matches!(err, CurvatureError::SymmetryViolation { identity: Symmetry::FirstPair, .. }));
    }

    #[test]
    fn bianchi_violation_detected() {
        // totally antisymmetric tensor has all pair symmetries but fails Bianchi
        let eps = levi_civita4();
        let err = Curvature::from_dense(eps, 1e-12).unwrap_err();
        assert!(matches!(err, CurvatureError::BianchiViolation { .. }));
    }

    pub(crate) fn levi_civita4() -> DenseTensor<f64> {
        DenseTensor::from_fn4(4, |i, j, k, l| {
            let p = [i, j, k, l];
            for a in 0..4 {
                for b in a + 1..4 {
                    if p[a] == p[b] {
                        return 0.0;
                    }
                }
            }
            let mut inv = 0;
            for a in 0..4 {
                for b in a + 1..4 {
                    if p[a] > p[b] {
                        inv += 1;
                    }
                }
            }
            if inv % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
    }

    #[test]
    fn projection_kills_levi_civita() {
        let eps = levi_civita4();
        let p = Curvature::project(&eps);
        assert!(p.tensor().max_abs() < 1e-15);
    }

    #[test]
    fn half_gg_is_unit_sphere() {
        let r = unit_curvature::<f64>(4);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let e = kron(i, k) * kron(j, l) - kron(i, l) * kron(j, k);
                        assert_eq!(r.get(i, j, k, l), e);
                    }
                }
            }
        }
        let ric = r.ricci();
        assert_eq!(ric.get(0, 0), 3.0);
        assert_eq!(ric.get(0, 1), 0.0);
        assert_eq!(r.scalar(), 12.0);
    }

    #[test]
    fn kn_of_rank_one_square_vanishes() {
        let e1 = SymTensor::<f64>::from_fn(4, |i, j| if i == 0 && j == 0 { 1.0 } else { 0.0 });
        let r = kulkarni_nomizu(&e1, &e1).unwrap();
        assert_eq!(r.tensor().max_abs(), 0.0);
        let z = SymTensor::<f64>::zeros(4);
        assert_eq!(kulkarni_nomizu(&z, &e1).unwrap().tensor().max_abs(), 0.0);
    }

    #[test]
    fn kn_dim_mismatch() {
        let a = SymTensor::<f64>::identity(3);
        let b = SymTensor::<f64>::identity(4);
        assert!(matches!(kulkarni_nomizu(&a, &b), Err(CurvatureError::DimMismatch { .. })));
    }

    #[test]
    fn dim_rejects_small() {
        assert!(Dim::new(2).is_err());
        assert_eq!(Dim::new(3).unwrap().get(), 3);
    }
}
