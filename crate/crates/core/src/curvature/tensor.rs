use std::ops::{Add, Mul, Sub};

use crate::curvature::CurvatureError;
use crate::Scalar;

/// Symmetric 2-tensor over an n-dimensional Euclidean space, stored as a
/// dense row-major n×n array. The metric is the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTensor<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymTensor<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    /// The metric g = Σ e_i ⊗ e_i.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Builds from a function evaluated on the upper triangle; the lower
    /// triangle is mirrored so the result is exactly symmetric.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self { n, data }
    }

    /// Validating constructor from a row-major array.
    pub fn from_rows(n: usize, data: Vec<T>, tol: T) -> Result<Self, CurvatureError> {
        if data.len() != n * n {
            return Err(CurvatureError::ShapeMismatch { expected: n * n, found: data.len() });
        }
        let scale = T::one() + data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((data[i * n + j] - data[j * n + i]).abs());
            }
        }
        if worst > tol * scale {
            return Err(CurvatureError::NotSymmetric { residual: worst.as_f64() });
        }
        Ok(Self { n, data })
    }

    /// e_i ⊙ e_j = e_i ⊗ e_j + e_j ⊗ e_i.
    pub fn sym_product(n: usize, i: usize, j: usize) -> Self {
        let mut s = Self::zeros(n);
        s.data[i * n + j] += T::one();
        s.data[j * n + i] += T::one();
        s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn trace(&self) -> T {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Full contraction Σ_ij A_ij B_ij.
    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, c: T) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&v| v * c).collect() }
    }

    /// Trace-free part A − (tr A / n) g.
    pub fn trace_free_part(&self) -> Self {
        let shift = self.trace() / T::of_usize(self.n);
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] -= shift;
        }
        out
    }

    /// Matrix product, used for S∘S.
    pub fn matmul(&self, other: &Self) -> Vec<T> {
        let n = self.n;
        let mut out = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn cast<U: Scalar>(&self) -> SymTensor<U> {
        SymTensor { n: self.n, data: self.data.iter().map(|v| U::of(v.as_f64())).collect() }
    }
}

impl<T: Scalar> Add for &SymTensor<T> {
    type Output = SymTensor<T>;
    fn add(self, rhs: Self) -> SymTensor<T> {
        SymTensor { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<T: Scalar> Sub for &SymTensor<T> {
    type Output = SymTensor<T>;
    fn sub(self, rhs: Self) -> SymTensor<T> {
        SymTensor { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect() }
    }
}

/// Trace-free symmetric 2-tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceFree<T>(SymTensor<T>);

impl<T: Scalar> TraceFree<T> {
    pub fn new(s: SymTensor<T>, tol: T) -> Result<Self, CurvatureError> {
        let tr = s.trace();
        if tr.abs() > tol * (T::one() + s.norm()) {
            return Err(CurvatureError::NotTraceFree { trace: tr.as_f64() });
        }
        Ok(Self(s))
    }

    /// Projects onto the trace-free subspace.
    pub fn project(s: &SymTensor<T>) -> Self {
        Self(s.trace_free_part())
    }

    pub fn inner(&self) -> &SymTensor<T> {
        &self.0
    }

    pub fn into_inner(self) -> SymTensor<T> {
        self.0
    }
}

/// Dense rank-k tensor over an n-dimensional space, index order row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor<T> {
    n: usize,
    rank: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseTensor<T> {
    pub fn zeros(n: usize, rank: usize) -> Self {
        Self { n, rank, data: vec![T::zero(); n.pow(rank as u32)] }
    }

    pub fn from_vec(n: usize, rank: usize, data: Vec<T>) -> Result<Self, CurvatureError> {
        let expected = n.pow(rank as u32);
        if data.len() != expected {
            return Err(CurvatureError::ShapeMismatch { expected, found: data.len() });
        }
        Ok(Self { n, rank, data })
    }

    /// Rank-4 tensor from an index function.
    pub fn from_fn4(n: usize, f: impl Fn(usize, usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        data.push(f(i, j, k, l));
                    }
                }
            }
        }
        Self { n, rank: 4, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    #[inline]
    pub fn at4(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        let n = self.n;
        self.data[((i * n + j) * n + k) * n + l]
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.data.len(), other.data.len());
        self.data.iter().zip(&other.data).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    /// Tensor with slots permuted: out[idx] = self[idx ∘ perm], i.e.
    /// `out_{i_0 i_1 ...} = self_{i_perm[0] i_perm[1] ...}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        let n = self.n;
        let r = self.rank;
        let mut strides = vec![1usize; r];
        for s in (0..r.saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * n;
        }
        let mut out = Vec::with_capacity(self.data.len());
        let mut idx = vec![0usize; r];
        for _ in 0..self.data.len() {
            let src: usize = (0..r).map(|s| idx[perm[s]] * strides[s]).sum();
            out.push(self.data[src]);
            for s in (0..r).rev() {
                idx[s] += 1;
                if idx[s] < n {
                    break;
                }
                idx[s] = 0;
            }
        }
        Self { n, rank: r, data: out }
    }

    pub fn scale(&self, c: T) -> Self {
        Self { n: self.n, rank: self.rank, data: self.data.iter().map(|&v| v * c).collect() }
    }

    pub fn cast<U: Scalar>(&self) -> DenseTensor<U> {
        DenseTensor { n: self.n, rank: self.rank, data: self.data.iter().map(|v| U::of(v.as_f64())).collect() }
    }
}

impl<T: Scalar> Add for &DenseTensor<T> {
    type Output = DenseTensor<T>;
    fn add(self, rhs: Self) -> DenseTensor<T> {
        DenseTensor {
            n: self.n,
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> Sub for &DenseTensor<T> {
    type Output = DenseTensor<T>;
    fn sub(self, rhs: Self) -> DenseTensor<T> {
        DenseTensor {
            n: self.n,
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Scalar> Mul<T> for &DenseTensor<T> {
    type Output = DenseTensor<T>;
    fn mul(self, c: T) -> DenseTensor<T> {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permuted_matches_index_definition() {
        let t = DenseTensor::<f64>::from_fn4(3, |i, j, k, l| (i * 27 + j * 9 + k * 3 + l) as f64);
        // out_{ijkl} = t_{jilk}
        let p = t.permuted(&[1, 0, 3, 2]);
        assert_eq!(p.at4(0, 1, 2, 0), t.at4(1, 0, 0, 2));
        assert_eq!(p.at4(2, 1, 0, 1), t.at4(1, 2, 1, 0));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        let err = SymTensor::<f64>::from_rows(2, vec![1.0, 2.0, 3.0, 1.0], 1e-12).unwrap_err();
        assert!(matches!(err, CurvatureError::NotSymmetric { .. }));
    }

    #[test]
    fn trace_free_rejects_trace() {
        let s = SymTensor::<f64>::identity(3);
        assert!(TraceFree::new(s.clone(), 1e-12).is_err());
        let p = TraceFree::project(&s);
        assert!(p.inner().trace().abs() < 1e-15);
    }
}
