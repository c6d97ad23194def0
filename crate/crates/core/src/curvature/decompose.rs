use super::{kulkarni_nomizu, Curvature, SymTensor, TraceFree};
use crate::Scalar;

/// Irreducible pieces `R = W + E∧g/(n−2) + s/(2n(n−1)) g∧g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<T> {
    pub weyl: Curvature<T>,
    pub traceless_ricci: TraceFree<T>,
    pub scalar: T,
    pub ricci: SymTensor<T>,
}

impl<T: Scalar> Decomposition<T> {
    pub fn dim(&self) -> usize {
        self.ricci.dim()
    }

    /// `E∧g/(n−2)`.
    pub fn ricci_part(&self) -> Curvature<T> {
        let n = self.dim();
        let g = SymTensor::identity(n);
        let eg = kulkarni_nomizu(self.traceless_ricci.inner(), &g).expect("same dimension");
        &eg * (T::one() / T::of_usize(n - 2))
    }

    /// `s/(2n(n−1)) g∧g`.
    pub fn scalar_part(&self) -> Curvature<T> {
        scalar_part(self.dim(), self.scalar)
    }

    pub fn reassemble(&self) -> Curvature<T> {
        &(&self.weyl + &self.ricci_part()) + &self.scalar_part()
    }

    pub fn is_einstein(&self, tol: T) -> bool {
        self.traceless_ricci.inner().norm() <= tol
    }
}

pub(crate) fn scalar_part<T: Scalar>(n: usize, s: T) -> Curvature<T> {
    let g = SymTensor::identity(n);
    let gg = kulkarni_nomizu(&g, &g).expect("same dimension");
    let nn = T::of_usize(n);
    &gg * (s / (T::of(2.0) * nn * (nn - T::one())))
}

impl<T: Scalar> Curvature<T> {
    pub fn decompose(&self) -> Decomposition<T> {
        let n = self.dim();
        let ricci = self.ricci();
        let scalar = ricci.trace();
        let traceless_ricci = TraceFree::project(&ricci);
        let mut d = Decomposition { weyl: Curvature::zeros(n), traceless_ricci, scalar, ricci };
        if n > 3 {
            let rest = &d.ricci_part() + &d.scalar_part();
            d.weyl = self - &rest;
        }
        d
    }

    pub fn weyl(&self) -> Curvature<T> {
        self.decompose().weyl
    }

    /// ‖E‖ ≤ tol·(1 + |s|).
    pub fn is_einstein(&self, tol: T) -> bool {
        let d = self.decompose();
        d.traceless_ricci.inner().norm() <= tol * (T::one() + d.scalar.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{random_curvature, unit_curvature};

    #[test]
    fn sphere_is_pure_scalar() {
        let r = &unit_curvature::<f64>(5) * 2.0;
        let d = r.decompose();
        assert!(d.weyl.tensor().max_abs() < 1e-14);
        assert!(d.traceless_ricci.inner().norm() < 1e-14);
        assert!((d.scalar - 40.0).abs() < 1e-12);
    }

    #[test]
    fn pure_ricci_round_trip() {
        let n = 5;
        let e0 = TraceFree::project(&SymTensor::<f64>::from_fn(n, |i, j| (i + 2 * j) as f64 * 0.1));
        let g = SymTensor::identity(n);
        let r = &kulkarni_nomizu(e0.inner(), &g).unwrap() * (1.0 / (n as f64 - 2.0));
        let d = r.decompose();
        assert!(d.weyl.tensor().max_abs() < 1e-13);
        assert!(d.scalar.abs() < 1e-13);
        let diff = d.traceless_ricci.inner() - e0.inner();
        assert!(diff.norm() < 1e-13);
    }

    #[test]
    fn random_round_trip_and_traceless_weyl() {
        let r = random_curvature::<f64>(5, 11);
        let d = r.decompose();
        let back = d.reassemble();
        assert!((&back - &r).norm_sq().sqrt() <= 1e-10 * r.norm_sq().sqrt());
        let wr = d.weyl.ricci();
        assert!(wr.norm() < 1e-12);
    }

    #[test]
    fn three_dimensional_weyl_is_zero() {
        let r = random_curvature::<f64>(3, 1);
        let d = r.decompose();
        assert_eq!(d.weyl.tensor().max_abs(), 0.0);
        assert!((&d.reassemble() - &r).tensor().max_abs() < 1e-12);
    }
}
