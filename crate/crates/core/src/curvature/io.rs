use serde::{Deserialize, Serialize};

use super::{Curvature, CurvatureError, DenseTensor};
use crate::Scalar;

/// On-disk form of a curvature tensor: `entries[i][j][k][l] = R_ijkl`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorFile {
    pub n: usize,
    pub entries: Vec<Vec<Vec<Vec<f64>>>>,
}

impl TensorFile {
    pub fn from_curvature<T: Scalar>(r: &Curvature<T>) -> Self {
        let n = r.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).map(|k| (0..n).map(|l| r.get(i, j, k, l).as_f64()).collect()).collect()).collect()
            })
            .collect();
        Self { n, entries }
    }

    pub fn to_curvature<T: Scalar>(&self, tol: T) -> Result<Curvature<T>, CurvatureError> {
        let n = self.n;
        let mut flat = Vec::with_capacity(n.pow(4));
        let bad = |what: &str| CurvatureError::Format(format!("{what} does not have length n = {n}"));
        if self.entries.len() != n {
            return Err(bad("entries"));
        }
        for a in &self.entries {
            if a.len() != n {
                return Err(bad("entries[i]"));
            }
            for b in a {
                if b.len() != n {
                    return Err(bad("entries[i][j]"));
                }
                for c in b {
                    if c.len() != n {
                        return Err(bad("entries[i][j][k]"));
                    }
                    flat.extend(c.iter().map(|&v| T::of(v)));
                }
            }
        }
        Curvature::from_dense(DenseTensor::from_vec(n, 4, flat)?, tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain numeric data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CurvatureError> {
        serde_json::from_str(s).map_err(|e| CurvatureError::Format(e.to_string()))
    }
}
