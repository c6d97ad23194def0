use super::OperatorError;
use crate::curvature::{Curvature, DenseTensor, SymTensor};
use crate::Scalar;

/// Derivation action of a symmetric 2-tensor on a rank-k tensor:
/// `(ST)_{i_1..i_k} = Σ_slot Σ_a S_{a i_slot} T_{i_1..a..i_k}`.
pub fn apply_sym2<T: Scalar>(s: &SymTensor<T>, t: &DenseTensor<T>) -> Result<DenseTensor<T>, OperatorError> {
    let n = s.dim();
    if t.dim() != n {
        return Err(OperatorError::DimMismatch { left: n, right: t.dim() });
    }
    let r = t.rank();
    let mut strides = vec![1usize; r];
    for k in (0..r.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * n;
    }
    let src = t.as_slice();
    let mut out = DenseTensor::zeros(n, r);
    let dst = out.as_mut_slice();
    let mut idx = vec![0usize; r];
    for (flat, cell) in dst.iter_mut().enumerate() {
        let mut acc = T::zero();
        for (slot, &stride) in strides.iter().enumerate() {
            let i = idx[slot];
            let base = flat - i * stride;
            for a in 0..n {
                acc += s.get(a, i) * src[base + a * stride];
            }
        }
        *cell = acc;
        for k in (0..r).rev() {
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(out)
}

/// Vector form of the curvature operator of the second kind on symmetric
/// tensors: `(R°S)_pq = ½ Σ_ij S_ij (R_ipqj + R_iqpj)`.
pub fn apply_second_kind<T: Scalar>(r: &Curvature<T>, s: &SymTensor<T>) -> SymTensor<T> {
    let n = r.dim();
    let half = T::of(0.5);
    SymTensor::from_fn(n, |p, q| {
        let mut acc = T::zero();
        for i in 0..n {
            for j in 0..n {
                acc += s.get(i, j) * (r.get(i, p, q, j) + r.get(i, q, p, j));
            }
        }
        acc * half
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::unit_curvature;

    #[test]
    fn metric_acts_as_rank_multiple() {
        let t = DenseTensor::<f64>::from_fn4(3, |i, j, k, l| (i + 2 * j + 3 * k + 5 * l) as f64);
        let g = SymTensor::identity(3);
        let gt = apply_sym2(&g, &t).unwrap();
        assert!((&gt - &t.scale(4.0)).max_abs() < 1e-14);
    }

    #[test]
    fn orthogonal_directions_annihilate() {
        let e11 = SymTensor::<f64>::from_fn(4, |i, j| if i == 0 && j == 0 { 1.0 } else { 0.0 });
        let t = DenseTensor::from_fn4(4, |i, j, k, l| if i == 1 && j == 1 && k == 1 && l == 1 { 1.0 } else { 0.0 });
        assert_eq!(apply_sym2(&e11, &t).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let g = SymTensor::<f64>::identity(3);
        let t = DenseTensor::<f64>::zeros(4, 4);
        assert!(apply_sym2(&g, &t).is_err());
    }

    #[test]
    fn sphere_acts_as_identity_on_trace_free() {
        let r = unit_curvature::<f64>(4);
        let s = SymTensor::from_fn(4, |i, j| if i == j { [1.0, -1.0, 2.0, -2.0][i] } else { 0.3 });
        let out = apply_second_kind(&r, &s);
        assert!((&out - &s).norm() < 1e-14);
    }
}
