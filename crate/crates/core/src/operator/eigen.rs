use super::OperatorError;
use crate::Scalar;

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a symmetric matrix. `vectors` is row-major with eigenvector
/// `a` in column `a`; eigenvalues are nondecreasing.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigh<T> {
    pub values: Vec<T>,
    pub vectors: Vec<T>,
    pub sweeps: usize,
}

/// FNV-1a over the f64 bit patterns of the entries.
pub fn matrix_hash<T: Scalar>(a: &[T]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in a {
        for byte in v.as_f64().to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

fn off_norm<T: Scalar>(a: &[T], m: usize) -> T {
    let mut acc = T::zero();
    for p in 0..m {
        for q in 0..m {
            if p != q {
                acc += a[p * m + q] * a[p * m + q];
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi eigensolver. Stops once `off(M) ≤ 1e−13·‖M‖_F` (or the
/// scalar type's precision floor, whichever is looser).
pub fn jacobi_eigh<T: Scalar>(input: &[T], m: usize) -> Result<Eigh<T>, OperatorError> {
    assert_eq!(input.len(), m * m);
    let mut a = input.to_vec();
    let mut v = vec![T::zero(); m * m];
    for i in 0..m {
        v[i * m + i] = T::one();
    }
    let norm = a.iter().map(|&x| x * x).sum::<T>().sqrt();
    let threshold = T::floor_tol(1e-13) * norm;
    let mut sweeps = 0;
    // negated so that NaN entries run into the sweep cap
    while !(off_norm(&a, m) <= threshold) {
        if sweeps == MAX_SWEEPS {
            return Err(OperatorError::ConvergenceFailure { sweeps, hash: matrix_hash(input) });
        }
        sweeps += 1;
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * m + q] - a[p * m + p]) / (T::of(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                a[p * m + q] = T::zero();
                a[q * m + p] = T::zero();
                for k in 0..m {
                    let vkp = v[k * m + p];
                    let vkq = v[k * m + q];
                    v[k * m + p] = c * vkp - s * vkq;
                    v[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&x, &y| a[x * m + x].partial_cmp(&a[y * m + y]).expect("finite eigenvalues"));
    let values = order.iter().map(|&c| a[c * m + c]).collect();
    let mut vectors = vec![T::zero(); m * m];
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..m {
            vectors[k * m + dst] = v[k * m + src];
        }
    }
    Ok(Eigh { values, vectors, sweeps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_two_by_two() {
        let e = jacobi_eigh(&[2.0f64, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-15);
        assert!((e.values[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn identity_needs_no_sweep() {
        let mut a = vec![0.0; 81];
        for i in 0..9 {
            a[i * 9 + i] = 1.0;
        }
        let e = jacobi_eigh(&a, 9).unwrap();
        assert_eq!(e.sweeps, 0);
        assert!(e.values.iter().all(|&x| x == 1.0));
        assert_eq!(e.vectors, a);
    }

    #[test]
    fn ties_keep_original_order() {
        let e = jacobi_eigh(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0], 3).unwrap();
        assert_eq!(e.values, vec![0.0, 1.0, 1.0]);
        assert_eq!(e.vectors[1], 1.0);
        assert_eq!(e.vectors[2 * 3 + 2], 1.0);
    }

    #[test]
    fn non_finite_input_fails_with_hash() {
        let err = jacobi_eigh(&[1.0, f64::NAN, f64::NAN, 1.0], 2);
        assert!(matches!(err, Err(OperatorError::ConvergenceFailure { sweeps: 100, .. })));
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(matrix_hash(&[1.0f64, 2.0]), matrix_hash(&[1.0f64, 2.0]));
        assert_ne!(matrix_hash(&[1.0f64, 2.0]), matrix_hash(&[2.0f64, 1.0]));
    }
}
