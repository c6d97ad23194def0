use super::apply::{apply_second_kind, apply_sym2};
use super::basis::{wedge_pairs, Sym2Basis};
use super::OperatorError;
use crate::curvature::{Curvature, DenseTensor, SymTensor};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// R̂ on Λ².
    First,
    /// R̃ on S².
    Tilde,
    /// R° on S₀².
    Second,
}

/// Symmetric matrix of a curvature operator in a declared orthonormal basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<T> {
    pub kind: OperatorKind,
    n: usize,
    size: usize,
    entries: Vec<T>,
    basis: Option<Sym2Basis<T>>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn from_entries(
        kind: OperatorKind,
        n: usize,
        size: usize,
        entries: Vec<T>,
        basis: Option<Sym2Basis<T>>,
    ) -> Self {
        assert_eq!(entries.len(), size * size);
        Self { kind, n, size, entries, basis }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> T {
        self.entries[a * self.size + b]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// `None` for R̂, whose basis is [`wedge_pairs`].
    pub fn basis(&self) -> Option<&Sym2Basis<T>> {
        self.basis.as_ref()
    }

    pub fn frobenius(&self) -> T {
        self.entries.iter().map(|&v| v * v).sum::<T>().sqrt()
    }

    /// max |M_ab − M_ba| / (1 + ‖M‖).
    pub fn symmetry_residual(&self) -> T {
        let m = self.size;
        let mut worst = T::zero();
        for a in 0..m {
            for b in a + 1..m {
                worst = worst.max((self.get(a, b) - self.get(b, a)).abs());
            }
        }
        worst / (T::one() + self.frobenius())
    }

    pub fn trace(&self) -> T {
        (0..self.size).map(|a| self.get(a, a)).sum()
    }

    /// tr(M^k) by explicit matrix powers.
    pub fn trace_pow(&self, k: u32) -> T {
        let m = self.size;
        if k == 0 {
            return T::of_usize(m);
        }
        let mut p = self.entries.clone();
        for _ in 1..k {
            let mut q = vec![T::zero(); m * m];
            for i in 0..m {
                for l in 0..m {
                    let a = p[i * m + l];
                    for j in 0..m {
                        q[i * m + j] += a * self.entries[l * m + j];
                    }
                }
            }
            p = q;
        }
        (0..m).map(|a| p[a * m + a]).sum()
    }

    /// `⟨M x, y⟩` for coordinate vectors.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let m = self.size;
        let mut acc = T::zero();
        for a in 0..m {
            let mut row = T::zero();
            for b in 0..m {
                row += self.get(a, b) * x[b];
            }
            acc += row * y[a];
        }
        acc
    }
}

/// `P_il = Σ_jk R_ijkl A_jk`, so that the bilinear form is `⟨P(A), B⟩`.
fn contract_middle<T: Scalar>(r: &Curvature<T>, a: &SymTensor<T>) -> SymTensor<T> {
    let n = r.dim();
    SymTensor::from_fn(n, |i, l| {
        let mut acc = T::zero();
        for j in 0..n {
            for k in 0..n {
                acc += r.get(i, j, k, l) * a.get(j, k);
            }
        }
        acc
    })
}

fn assemble_bilinear<T: Scalar>(r: &Curvature<T>, basis: &Sym2Basis<T>, kind: OperatorKind) -> OperatorMatrix<T> {
    let m = basis.len();
    let images: Vec<SymTensor<T>> = basis.elements().iter().map(|b| contract_middle(r, b)).collect();
    let mut entries = vec![T::zero(); m * m];
    for a in 0..m {
        for b in 0..m {
            entries[a * m + b] = images[a].dot(basis.get(b));
        }
    }
    OperatorMatrix::from_entries(kind, r.dim(), m, entries, Some(basis.clone()))
}

/// R° on the standard S₀² basis: `M_ab = Σ R_ijkl (B_a)_jk (B_b)_il`.
pub fn op_second_kind<T: Scalar>(r: &Curvature<T>) -> OperatorMatrix<T> {
    op_second_kind_in(r, &Sym2Basis::s2_0(r.dim()))
}

/// R° in a caller-supplied orthonormal basis of S₀².
pub fn op_second_kind_in<T: Scalar>(r: &Curvature<T>, basis: &Sym2Basis<T>) -> OperatorMatrix<T> {
    assemble_bilinear(r, basis, OperatorKind::Second)
}

/// R° assembled from the vector action, `M_ab = ⟨R°(B_a), B_b⟩`.
pub fn op_second_kind_by_action<T: Scalar>(r: &Curvature<T>) -> OperatorMatrix<T> {
    let basis = Sym2Basis::s2_0(r.dim());
    let m = basis.len();
    let mut entries = vec![T::zero(); m * m];
    for a in 0..m {
        let img = apply_second_kind(r, basis.get(a));
        for b in 0..m {
            entries[a * m + b] = img.dot(basis.get(b));
        }
    }
    OperatorMatrix::from_entries(OperatorKind::Second, r.dim(), m, entries, Some(basis))
}

/// R̃ on the full S² basis.
pub fn op_tilde<T: Scalar>(r: &Curvature<T>) -> OperatorMatrix<T> {
    assemble_bilinear(r, &Sym2Basis::s2(r.dim()), OperatorKind::Tilde)
}

/// R̂ on `{e_i∧e_j}_{i<j}`: entries `R_ijkl`.
pub fn op_first_kind<T: Scalar>(r: &Curvature<T>) -> OperatorMatrix<T> {
    let pairs = wedge_pairs(r.dim());
    let m = pairs.len();
    let mut entries = vec![T::zero(); m * m];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            entries[a * m + b] = r.get(i, j, k, l);
        }
    }
    OperatorMatrix::from_entries(OperatorKind::First, r.dim(), m, entries, None)
}

/// `Σ_ab M_ab ⟨B_a T, B_b T⟩`, the quadratic form of an operator matrix on
/// the derivation images of a tensor `t`.
pub fn quadratic_form<T: Scalar>(m: &OperatorMatrix<T>, t: &DenseTensor<T>) -> Result<T, OperatorError> {
    let basis = m.basis().expect("quadratic form needs a symmetric-tensor basis");
    let images = basis.elements().iter().map(|b| apply_sym2(b, t)).collect::<Result<Vec<_>, _>>()?;
    let size = m.size();
    let mut acc = T::zero();
    for a in 0..size {
        for b in 0..size {
            let mab = m.get(a, b);
            if mab != T::zero() {
                acc += mab * images[a].dot(&images[b]);
            }
        }
    }
    Ok(acc)
}
