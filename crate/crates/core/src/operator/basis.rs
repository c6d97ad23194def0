use super::OperatorError;
use crate::curvature::SymTensor;
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Full,
    TraceFree,
}

/// Ordered orthonormal family of symmetric 2-tensors.
#[derive(Clone, Debug, PartialEq)]
pub struct Sym2Basis<T> {
    n: usize,
    kind: BasisKind,
    elements: Vec<SymTensor<T>>,
}

fn off_diagonal<T: Scalar>(n: usize) -> Vec<SymTensor<T>> {
    let r = T::one() / T::of(2.0).sqrt();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(SymTensor::sym_product(n, i, j).scale(r));
        }
    }
    out
}

impl<T: Scalar> Sym2Basis<T> {
    /// `{e_i⊙e_j/√2}_{i<j}` in lexicographic order, then `{e_i⊙e_i/2}`.
    pub fn s2(n: usize) -> Self {
        let mut elements = off_diagonal(n);
        let half = T::of(0.5);
        elements.extend((0..n).map(|i| SymTensor::sym_product(n, i, i).scale(half)));
        Self { n, kind: BasisKind::Full, elements }
    }

    /// Off-diagonal elements of [`Self::s2`], then Gram–Schmidt on
    /// `e_i⊙e_i/2 − g/n` for `i = 1..n−1`.
    pub fn s2_0(n: usize) -> Self {
        let mut elements = off_diagonal(n);
        let g = SymTensor::<T>::identity(n);
        let inv_n = T::one() / T::of_usize(n);
        let mut diag: Vec<SymTensor<T>> = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            let mut v = &SymTensor::sym_product(n, i, i).scale(T::of(0.5)) - &g.scale(inv_n);
            for u in &diag {
                let c = v.dot(u);
                v = &v - &u.scale(c);
            }
            let norm = v.norm();
            diag.push(v.scale(T::one() / norm));
        }
        elements.extend(diag);
        Self { n, kind: BasisKind::TraceFree, elements }
    }

    /// Wraps a caller-supplied family after checking orthonormality.
    pub fn from_elements(
        n: usize,
        kind: BasisKind,
        elements: Vec<SymTensor<T>>,
        tol: T,
    ) -> Result<Self, OperatorError> {
        if let Some(e) = elements.iter().find(|e| e.dim() != n) {
            return Err(OperatorError::DimMismatch { left: n, right: e.dim() });
        }
        let b = Self { n, kind, elements };
        let residual = b.gram_residual();
        if residual > tol {
            return Err(OperatorError::NotOrthonormal { residual: residual.as_f64() });
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SymTensor<T>] {
        &self.elements
    }

    pub fn get(&self, a: usize) -> &SymTensor<T> {
        &self.elements[a]
    }

    pub fn gram(&self) -> Vec<T> {
        let m = self.len();
        let mut g = vec![T::zero(); m * m];
        for a in 0..m {
            for b in 0..m {
                g[a * m + b] = self.elements[a].dot(&self.elements[b]);
            }
        }
        g
    }

    /// max |⟨B_a, B_b⟩ − δ_ab|.
    pub fn gram_residual(&self) -> T {
        let m = self.len();
        self.gram()
            .iter()
            .enumerate()
            .map(|(idx, &v)| {
                let d = if idx / m == idx % m { T::one() } else { T::zero() };
                (v - d).abs()
            })
            .fold(T::zero(), T::max)
    }

    /// Tensor with coordinates `coeffs` in this basis.
    pub fn combine(&self, coeffs: &[T]) -> SymTensor<T> {
        debug_assert_eq!(coeffs.len(), self.len());
        let n = self.n;
        let mut acc = vec![T::zero(); n * n];
        for (c, e) in coeffs.iter().zip(&self.elements) {
            for (a, &v) in acc.iter_mut().zip(e.as_slice()) {
                *a += *c * v;
            }
        }
        SymTensor::from_fn(n, |i, j| acc[i * n + j])
    }

    /// Coordinates of `s` (orthogonal projection onto the span).
    pub fn coords(&self, s: &SymTensor<T>) -> Vec<T> {
        self.elements.iter().map(|e| e.dot(s)).collect()
    }

    /// The basis `{Σ_b q_ba B_b}_a` for an orthogonal m×m matrix `q` (row-major).
    pub fn rotated(&self, q: &[T]) -> Self {
        let m = self.len();
        let elements = (0..m)
            .map(|a| {
                let col: Vec<T> = (0..m).map(|b| q[b * m + a]).collect();
                self.combine(&col)
            })
            .collect();
        Self { n: self.n, kind: self.kind, elements }
    }
}

/// Index pairs `(i, j)`, `i < j`, of the orthonormal basis `{e_i∧e_j}` of Λ².
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(Sym2Basis::<f64>::s2(4).len(), 10);
        assert_eq!(Sym2Basis::<f64>::s2_0(4).len(), 9);
        assert_eq!(wedge_pairs(4).len(), 6);
    }

    #[test]
    fn s2_0_is_orthonormal_and_trace_free() {
        let b = Sym2Basis::<f64>::s2_0(6);
        assert!(b.gram_residual() < 1e-13);
        assert!(b.elements().iter().all(|e| e.trace().abs() < 1e-13));
        assert!(Sym2Basis::<f64>::s2(6).gram_residual() < 1e-15);
    }

    #[test]
    fn combine_and_coords_invert() {
        let b = Sym2Basis::<f64>::s2(3);
        let c: Vec<f64> = (0..6).map(|i| i as f64 - 2.5).collect();
        let back = b.coords(&b.combine(&c));
        for (x, y) in c.iter().zip(&back) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn non_orthonormal_family_rejected() {
        let e = SymTensor::<f64>::identity(3);
        let r = Sym2Basis::from_elements(3, BasisKind::Full, vec![e], 1e-12);
        assert!(matches!(r, Err(OperatorError::NotOrthonormal { .. })));
    }
}
