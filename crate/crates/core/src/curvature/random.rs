use rand::Rng;
use rand_distr::StandardNormal;

use super::decompose::scalar_part;
use super::{Curvature, CurvatureError, DenseTensor};
use crate::seed;
use crate::Scalar;

/// n⁴ i.i.d. standard normal entries. Draws are made in f64 and cast, so the
/// f32 and f64 streams agree up to rounding.
pub fn random_raw<T: Scalar>(n: usize, seed: u64) -> DenseTensor<T> {
    let mut rng = seed::rng(seed);
    let data = (0..n.pow(4)).map(|_| T::of(rng.sample::<f64, _>(StandardNormal))).collect();
    DenseTensor::from_vec(n, 4, data).expect("length n^4")
}

pub fn random_curvature<T: Scalar>(n: usize, seed: u64) -> Curvature<T> {
    Curvature::project(&random_raw(n, seed))
}

pub fn random_weyl<T: Scalar>(n: usize, seed: u64) -> Result<Curvature<T>, CurvatureError> {
    if n < 4 {
        return Err(CurvatureError::UnsupportedDim { n, reason: "Weyl tensors vanish for n < 4" });
    }
    Ok(random_curvature::<T>(n, seed).weyl())
}

/// Random Weyl part plus the constant-curvature tensor of scalar curvature `s`.
pub fn random_einstein<T: Scalar>(n: usize, s: T, seed: u64) -> Result<Curvature<T>, CurvatureError> {
    let w = random_weyl(n, seed)?;
    Ok(&w + &scalar_part(n, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_bits() {
        let a = random_curvature::<f64>(4, 3);
        let b = random_curvature::<f64>(4, 3);
        assert_eq!(a.tensor().as_slice(), b.tensor().as_slice());
        assert_ne!(a, random_curvature::<f64>(4, 4));
    }

    #[test]
    fn generated_tensors_validate() {
        for n in 3..7 {
            let r = random_curvature::<f64>(n, n as u64);
            let c = Curvature::from_dense(r.tensor().clone(), 1e-12);
            assert!(c.is_ok(), "n={n}: {c:?}");
        }
    }

    #[test]
    fn einstein_has_requested_scalar() {
        let r = random_einstein::<f64>(4, 12.0, 9).unwrap();
        let d = r.decompose();
        assert!((d.scalar - 12.0).abs() < 1e-12);
        assert!(d.traceless_ricci.inner().norm() < 1e-12);
    }

    #[test]
    fn weyl_rejects_three() {
        assert!(matches!(random_weyl::<f64>(3, 0), Err(CurvatureError::UnsupportedDim { n: 3, .. })));
        let w = random_weyl::<f64>(4, 0).unwrap();
        assert!(w.ricci().norm() < 1e-12);
        assert!(w.norm_sq() > 0.1);
    }

    #[test]
    fn projection_shrinks_norm() {
        let raw = random_raw::<f64>(4, 5);
        let p = Curvature::project(&raw);
        assert!(p.norm_sq() <= raw.norm_sq());
        let again = Curvature::project(p.tensor());
        assert!((&again - &p).tensor().max_abs() < 1e-14);
    }
}
