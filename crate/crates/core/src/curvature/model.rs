use std::str::FromStr;

use super::{unit_curvature, Curvature, CurvatureError, DenseTensor};
use crate::Scalar;

/// Known-answer curvature tensors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModelSpace {
    Flat {
        n: usize,
    },
    Sphere {
        n: usize,
        kappa: f64,
    },
    /// S^p(κ) × S^p(κ), dimension 2p.
    ProductSpheres {
        p: usize,
        kappa: f64,
    },
}

impl ModelSpace {
    /// Builds a model from its CLI name. `n` is ignored for `product_spheres`,
    /// whose dimension is 2p.
    pub fn from_name(name: &str, n: usize, kappa: f64, p: usize) -> Result<Self, CurvatureError> {
        let kind: ModelKind = name.parse()?;
        let m = match kind {
            ModelKind::Flat => ModelSpace::Flat { n },
            ModelKind::Sphere => ModelSpace::Sphere { n, kappa },
            ModelKind::ProductSpheres => ModelSpace::ProductSpheres { p, kappa },
        };
        m.validate()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        match *self {
            ModelSpace::Flat { n } | ModelSpace::Sphere { n, .. } => n,
            ModelSpace::ProductSpheres { p, .. } => 2 * p,
        }
    }

    fn validate(&self) -> Result<(), CurvatureError> {
        match *self {
            ModelSpace::Flat { n } if n < 3 => Err(CurvatureError::BadParams(format!("n = {n} < 3"))),
            ModelSpace::Sphere { n, .. } if n < 3 => Err(CurvatureError::BadParams(format!("n = {n} < 3"))),
            ModelSpace::Sphere { kappa, .. } | ModelSpace::ProductSpheres { kappa, .. } if !(kappa > 0.0) => {
                Err(CurvatureError::BadParams(format!("kappa = {kappa} must be positive")))
            }
            ModelSpace::ProductSpheres { p, .. } if p < 2 => Err(CurvatureError::BadParams(format!("p = {p} < 2"))),
            _ => Ok(()),
        }
    }

    pub fn build<T: Scalar>(&self) -> Result<Curvature<T>, CurvatureError> {
        self.validate()?;
        Ok(match *self {
            ModelSpace::Flat { n } => Curvature::zeros(n),
            ModelSpace::Sphere { n, kappa } => &unit_curvature(n) * T::of(kappa),
            ModelSpace::ProductSpheres { p, kappa } => {
                let k = T::of(kappa);
                let block = |i: usize| i / p;
                let t = DenseTensor::from_fn4(2 * p, |i, j, l, m| {
                    if block(i) != block(j) || block(j) != block(l) || block(l) != block(m) {
                        return T::zero();
                    }
                    let d = |a: usize, b: usize| if a == b { T::one() } else { T::zero() };
                    k * (d(i, l) * d(j, m) - d(i, m) * d(j, l))
                });
                Curvature::from_dense_unchecked(t)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ModelKind {
    Flat,
    Sphere,
    ProductSpheres,
}

impl FromStr for ModelKind {
    type Err = CurvatureError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "flat" => Ok(ModelKind::Flat),
            "sphere" => Ok(ModelKind::Sphere),
            "product_spheres" | "product-spheres" => Ok(ModelKind::ProductSpheres),
            other => Err(CurvatureError::UnknownModel(other.to_string())),
        }
    }
}
