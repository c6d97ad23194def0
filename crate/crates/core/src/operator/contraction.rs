use super::OperatorError;
use crate::curvature::{Curvature, DenseTensor, SymTensor};
use crate::Scalar;

fn check_dims<T: Scalar>(a: &DenseTensor<T>, b: &DenseTensor<T>) -> Result<(), OperatorError> {
    if a.dim() != b.dim() {
        return Err(OperatorError::DimMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(())
}

/// Full contraction of three rank-4 tensors described by an index pattern
/// such as `"tpsq,tpkl,sqkl"`: six letters, each used exactly twice.
pub fn cubic_contraction<T: Scalar>(
    x: &DenseTensor<T>,
    y: &DenseTensor<T>,
    z: &DenseTensor<T>,
    pattern: &str,
) -> Result<T, OperatorError> {
    check_dims(x, y)?;
    check_dims(x, z)?;
    let bad = || OperatorError::BadPattern(pattern.to_string());
    let groups: Vec<Vec<char>> = pattern.split(',').map(|g| g.trim().chars().collect()).collect();
    if groups.len() != 3 || groups.iter().any(|g| g.len() != 4) {
        return Err(bad());
    }
    let mut letters: Vec<char> = Vec::with_capacity(6);
    for &c in groups.iter().flatten() {
        if !letters.contains(&c) {
            letters.push(c);
        }
    }
    if letters.len() != 6 {
        return Err(bad());
    }
    for &c in &letters {
        if groups.iter().flatten().filter(|&&d| d == c).count() != 2 {
            return Err(bad());
        }
    }
    let n = x.dim();
    let mut st = [[0usize; 6]; 3];
    for (g, group) in groups.iter().enumerate() {
        for (slot, c) in group.iter().enumerate() {
            let l = letters.iter().position(|d| d == c).expect("collected above");
            st[g][l] += n.pow(3 - slot as u32);
        }
    }
    let (xs, ys, zs) = (x.as_slice(), y.as_slice(), z.as_slice());
    let mut acc = T::zero();
    for i0 in 0..n {
        let o0 = [i0 * st[0][0], i0 * st[1][0], i0 * st[2][0]];
        for i1 in 0..n {
            let o1 = [o0[0] + i1 * st[0][1], o0[1] + i1 * st[1][1], o0[2] + i1 * st[2][1]];
            for i2 in 0..n {
                let o2 = [o1[0] + i2 * st[0][2], o1[1] + i2 * st[1][2], o1[2] + i2 * st[2][2]];
                for i3 in 0..n {
                    let o3 = [o2[0] + i3 * st[0][3], o2[1] + i3 * st[1][3], o2[2] + i3 * st[2][3]];
                    for i4 in 0..n {
                        let o4 = [o3[0] + i4 * st[0][4], o3[1] + i4 * st[1][4], o3[2] + i4 * st[2][4]];
                        for i5 in 0..n {
                            acc += xs[o4[0] + i5 * st[0][5]] * ys[o4[1] + i5 * st[1][5]] * zs[o4[2] + i5 * st[2][5]];
                        }
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// `α = Σ R_tpsq T_tpkl T_sqkl`, `β = Σ R_tspq T_tjpl T_sjql`.
pub fn alpha_beta<T: Scalar>(r: &Curvature<T>, t: &Curvature<T>) -> Result<(T, T), OperatorError> {
    let (rt, tt) = (r.tensor(), t.tensor());
    let alpha = cubic_contraction(rt, tt, tt, "tpsq,tpkl,sqkl")?;
    let beta = cubic_contraction(rt, tt, tt, "tspq,tjpl,sjql")?;
    Ok((alpha, beta))
}

/// The three contractions reduced by the first Bianchi identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BianchiContractions<T> {
    /// Σ R_tspq T_tpkl T_sqkl, equals α/2.
    pub first: T,
    /// Σ R_tpsq T_tkpl T_skql, equals α/4.
    pub second: T,
    /// Σ R_pstq T_tjpl T_sjql, equals β − α/4.
    pub third: T,
}

pub fn bianchi_contractions<T: Scalar>(
    r: &Curvature<T>,
    t: &Curvature<T>,
) -> Result<BianchiContractions<T>, OperatorError> {
    let (rt, tt) = (r.tensor(), t.tensor());
    Ok(BianchiContractions {
        first: cubic_contraction(rt, tt, tt, "tspq,tpkl,sqkl")?,
        second: cubic_contraction(rt, tt, tt, "tpsq,tkpl,skql")?,
        third: cubic_contraction(rt, tt, tt, "pstq,tjpl,sjql")?,
    })
}

/// Relative residuals `|x − y| / (1 + max(|x|, |y|))` of the three reductions.
pub fn bianchi_contraction_residuals<T: Scalar>(r: &Curvature<T>, t: &Curvature<T>) -> Result<[T; 3], OperatorError> {
    let c = bianchi_contractions(r, t)?;
    let (alpha, beta) = alpha_beta(r, t)?;
    let quarter = T::of(0.25);
    let rel = |x: T, y: T| (x - y).abs() / (T::one() + x.abs().max(y.abs()));
    Ok([rel(c.first, alpha * T::of(0.5)), rel(c.second, alpha * quarter), rel(c.third, beta - alpha * quarter)])
}

/// `Σ A_st T_sjkl T_tjkl`.
pub fn ricci_contraction<T: Scalar>(a: &SymTensor<T>, t: &Curvature<T>) -> Result<T, OperatorError> {
    let n = t.dim();
    if a.dim() != n {
        return Err(OperatorError::DimMismatch { left: a.dim(), right: n });
    }
    let block = n * n * n;
    let ts = t.tensor().as_slice();
    let mut acc = T::zero();
    for s in 0..n {
        let rs = &ts[s * block..(s + 1) * block];
        for u in 0..n {
            let w = a.get(s, u);
            if w == T::zero() {
                continue;
            }
            let ru = &ts[u * block..(u + 1) * block];
            let q: T = rs.iter().zip(ru).map(|(&x, &y)| x * y).sum();
            acc += w * q;
        }
    }
    Ok(acc)
}
