use super::report::{Context, IdentityReport, Relation};
use super::IdentityError;
use crate::curvature::{Curvature, SymTensor, TraceFree};
use crate::operator::{
    alpha_beta, apply_sym2, bianchi_contraction_residuals, cubic_contraction, op_second_kind, ricci_contraction,
    spectrum, Spectrum, Sym2Basis,
};
use crate::Scalar;

const EINSTEIN_TOL: f64 = 1e-9;
const WEYL_TOL: f64 = 1e-9;

const NOTE_BOCHNER: &str = "<Laplacian R, R> taken as its algebraic value 2 Ric(T,T) - alpha - 4 beta";

fn f<T: Scalar>(x: T) -> f64 {
    x.as_f64()
}

fn cast<T: Scalar>(x: usize) -> T {
    T::of_usize(x)
}

fn require_einstein<T: Scalar>(r: &Curvature<T>) -> Result<(), IdentityError> {
    let e = r.decompose().traceless_ricci.into_inner().norm();
    let scale = T::one() + r.norm_sq().sqrt();
    if e > T::of(EINSTEIN_TOL) * scale {
        return Err(IdentityError::NotEinstein { norm: f(e) });
    }
    Ok(())
}

fn require_weyl<T: Scalar>(w: &Curvature<T>) -> Result<(), IdentityError> {
    let ric = w.ricci().norm();
    if ric > T::of(WEYL_TOL) * (T::one() + w.norm_sq().sqrt()) {
        return Err(IdentityError::NotWeyl { norm: f(ric) });
    }
    Ok(())
}

/// Algebraic value `2 Σ Ric_lt T_ijkl T_ijkt − α − 4β` of ⟨ΔT, T⟩ for a
/// harmonic tensor T over R.
pub fn bochner_value<T: Scalar>(r: &Curvature<T>, t: &Curvature<T>) -> Result<T, IdentityError> {
    let (alpha, beta) = alpha_beta(r, t)?;
    let rt = ricci_contraction(&r.ricci(), t)?;
    Ok(T::of(2.0) * rt - alpha - T::of(4.0) * beta)
}

/// `Σ_α λ_α |S^α T|²` over an eigenfamily.
pub fn eigen_expansion<T: Scalar>(sp: &Spectrum<T>, t: &Curvature<T>) -> Result<T, IdentityError> {
    weighted_eigen_sum(&sp.eigenvalues, &sp.eigentensors, t)
}

/// `Σ_α λ_α |S^α T|²` for arbitrary weights and tensors.
pub fn weighted_eigen_sum<T: Scalar>(
    weights: &[T],
    tensors: &[SymTensor<T>],
    t: &Curvature<T>,
) -> Result<T, IdentityError> {
    let mut acc = T::zero();
    for (&lam, s) in weights.iter().zip(tensors) {
        acc += lam * apply_sym2(s, t.tensor())?.norm_sq();
    }
    Ok(acc)
}

/// Eigen-expansion of ⟨R°(T), T⟩ against its contraction closed form
/// `((2n+32)/n) Σ Ric_st T_sjkl T_tjkl − 5α + 4β − (16/n²) s |T|²`.
pub fn quadratic_form_check<T: Scalar>(
    r: &Curvature<T>,
    t: &Curvature<T>,
    ctx: Context,
    tol: f64,
) -> Result<IdentityReport, IdentityError> {
    let n: T = cast(r.dim());
    let sp = spectrum(&op_second_kind(r))?;
    let lhs = eigen_expansion(&sp, t)?;
    let (alpha, beta) = alpha_beta(r, t)?;
    let ric = r.ricci();
    let s = ric.trace();
    let rt = ricci_contraction(&ric, t)?;
    let rhs = (T::of(2.0) * n + T::of(32.0)) / n * rt - T::of(5.0) * alpha + T::of(4.0) * beta
        - T::of(16.0) / (n * n) * s * t.norm_sq();
    Ok(IdentityReport::equality("quadratic-form-expansion", f(lhs), f(rhs), tol, ctx))
}

/// The three contractions reduced by the first Bianchi identity.
pub fn bianchi_checks<T: Scalar>(
    r: &Curvature<T>,
    t: &Curvature<T>,
    ctx: Context,
    tol: f64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let res = bianchi_contraction_residuals(r, t)?;
    Ok(res
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            IdentityReport::inequality(&format!("bianchi-contraction-{}", i + 1), f(x), Relation::Le, 0.0, tol, ctx)
        })
        .collect())
}

/// `tr R° = (n+2)s/(2n)`, valid for every curvature tensor.
pub fn trace_one_check<T: Scalar>(r: &Curvature<T>, ctx: Context, tol: f64) -> IdentityReport {
    let n: T = cast(r.dim());
    let m = op_second_kind(r);
    let rhs = (n + T::of(2.0)) * r.scalar() / (T::of(2.0) * n);
    IdentityReport::equality("trace-1", f(m.trace()), f(rhs), tol, ctx)
}

/// Matrix traces of R°, R°², R°³ against `(n+2)s/(2n)`, `(3/4)|R|² − s²/n²`
/// and `−β + α/8 + s³/n³`. The last two need an Einstein tensor.
pub fn trace_checks<T: Scalar>(r: &Curvature<T>, ctx: Context, tol: f64) -> Result<Vec<IdentityReport>, IdentityError> {
    require_einstein(r)?;
    let n: T = cast(r.dim());
    let m = op_second_kind(r);
    let s = r.scalar();
    let (alpha, beta) = alpha_beta(r, r)?;
    let rhs2 = T::of(0.75) * r.norm_sq() - s * s / (n * n);
    let rhs3 = -beta + alpha / T::of(8.0) + s * s * s / (n * n * n);
    Ok(vec![
        trace_one_check(r, ctx, tol),
        IdentityReport::equality("trace-2", f(m.trace_pow(2)), f(rhs2), tol, ctx),
        IdentityReport::equality("trace-3", f(m.trace_pow(3)), f(rhs3), tol, ctx),
    ])
}

/// Everything the Einstein identities need, computed once per tensor.
#[derive(Clone, Debug)]
pub struct EinsteinProfile<T> {
    pub n: usize,
    pub s: T,
    pub norm_r_sq: T,
    pub norm_w_sq: T,
    pub alpha: T,
    pub beta: T,
    /// `Σ W_tpsq W_tpkl W_sqkl`
    pub weyl_cubic_1: T,
    /// `Σ W_tspq W_tjpl W_sjql`
    pub weyl_cubic_2: T,
    /// Σλ, Σλ², Σλ³ from the spectrum.
    pub power_sums: [T; 3],
    /// `Σ λ_α |S^α R|²`
    pub expansion_r: T,
    /// `Σ λ_α |S^α W|²`
    pub expansion_w: T,
    pub bochner: T,
    pub spectrum: Spectrum<T>,
    pub weyl: Curvature<T>,
}

impl<T: Scalar> EinsteinProfile<T> {
    pub fn new(r: &Curvature<T>) -> Result<Self, IdentityError> {
        require_einstein(r)?;
        let d = r.decompose();
        let weyl = d.weyl;
        let (alpha, beta) = alpha_beta(r, r)?;
        let wt = weyl.tensor();
        let weyl_cubic_1 = cubic_contraction(wt, wt, wt, "tpsq,tpkl,sqkl")?;
        let weyl_cubic_2 = cubic_contraction(wt, wt, wt, "tspq,tjpl,sjql")?;
        let sp = spectrum(&op_second_kind(r))?;
        let power_sums = [sp.power_sum(1), sp.power_sum(2), sp.power_sum(3)];
        let expansion_r = eigen_expansion(&sp, r)?;
        let expansion_w = eigen_expansion(&sp, &weyl)?;
        let bochner = bochner_value(r, r)?;
        Ok(Self {
            n: r.dim(),
            s: d.scalar,
            norm_r_sq: r.norm_sq(),
            norm_w_sq: weyl.norm_sq(),
            alpha,
            beta,
            weyl_cubic_1,
            weyl_cubic_2,
            power_sums,
            expansion_r,
            expansion_w,
            bochner,
            spectrum: sp,
            weyl,
        })
    }

    fn big_n(&self) -> T {
        cast((self.n - 1) * (self.n + 2) / 2)
    }
}

/// The Einstein decomposition of 3⟨ΔR,R⟩, its quadratic-form version, the
/// Weyl pairing display, the Einstein form of the Bochner value and the norm
/// split `|R|² = |W|² + 2s²/(n(n−1))`.
pub fn einstein_chain<T: Scalar>(p: &EinsteinProfile<T>, ctx: Context, tol: f64) -> Vec<IdentityReport> {
    let n: T = cast(p.n);
    let one = T::one();
    let two = T::of(2.0);
    let three = T::of(3.0);
    let eight = T::of(8.0);
    let sixteen = T::of(16.0);
    let s = p.s;
    let s3 = s * s * s;
    let [l1, l2, l3] = p.power_sums;
    let nm1 = n - one;
    let b3 = three * p.bochner;

    let rhs_a = p.expansion_w
        + eight * ((-n * n * n + T::of(6.0) * n * n + T::of(12.0) * n - eight) / (three * n.powi(4) * nm1 * nm1)) * s3
        + eight * ((two * n * n - T::of(22.0) * n + eight) / (three * n * n * nm1)) * s * l2
        + sixteen * l3;
    let rhs_b = p.expansion_r + (T::of(4.0) * n - sixteen) / (n * n) * s * p.norm_r_sq + sixteen * l3
        - sixteen * s3 / (n * n * n);
    let rhs_c = p.expansion_w + sixteen * n * s * s / (n * n * nm1 * nm1) * l1 - T::of(32.0) * s / (n * nm1) * l2;
    let tr3 = -p.beta + p.alpha / eight + s3 / (n * n * n);
    let alt = two * (s / n) * p.norm_r_sq - T::of(1.5) * p.alpha + T::of(4.0) * tr3 - T::of(4.0) * s3 / (n * n * n);
    let split = p.norm_w_sq + two * s * s / (n * nm1);

    vec![
        IdentityReport::equality("bochner-eigen-weyl", f(b3), f(rhs_a), tol, ctx).with_note(NOTE_BOCHNER),
        IdentityReport::equality("bochner-quadratic", f(b3), f(rhs_b), tol, ctx).with_note(NOTE_BOCHNER),
        IdentityReport::equality("weyl-pairing", f(p.expansion_r), f(rhs_c), tol, ctx),
        IdentityReport::equality("bochner-value-einstein", f(p.bochner), f(alt), tol, ctx).with_note(NOTE_BOCHNER),
        IdentityReport::equality("norm-split", f(p.norm_r_sq), f(split), tol, ctx),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gaps<T> {
    pub gap2: T,
    pub gap3: T,
}

/// Power-mean gaps `Σλ² − (Σλ)²/N` and `Σλ³ − (Σλ)³/N²`, with N the
/// dimension of S₀².
pub fn power_mean_gaps<T: Scalar>(eigenvalues: &[T], n: usize) -> Result<Gaps<T>, IdentityError> {
    let big = (n - 1) * (n + 2) / 2;
    if eigenvalues.len() != big {
        return Err(IdentityError::SizeMismatch { expected: big, found: eigenvalues.len() });
    }
    let nn: T = cast(big);
    let l1: T = eigenvalues.iter().copied().sum();
    let l2: T = eigenvalues.iter().map(|&x| x * x).sum();
    let l3: T = eigenvalues.iter().map(|&x| x * x * x).sum();
    Ok(Gaps { gap2: l2 - l1 * l1 / nn, gap3: l3 - l1 * l1 * l1 / (nn * nn) })
}

/// `2(n²−11n+4)/(3n(n−1)(n+2))`.
pub fn gap_coefficient<T: Scalar>(n: usize) -> T {
    let n: T = cast(n);
    T::of(2.0) * (n * n - T::of(11.0) * n + T::of(4.0)) / (T::of(3.0) * n * (n - T::one()) * (n + T::of(2.0)))
}

/// Gap-form rewrites of 3⟨ΔR,R⟩. Returns two audits: the form with unit
/// weights on the gap terms and the form with weight 16. When `gate_sign` is
/// set (nonnegative spectra, n ≥ 11) a gated report asserts the unit-weight
/// form is nonnegative.
pub fn gap_forms<T: Scalar>(p: &EinsteinProfile<T>, ctx: Context, tol: f64, gate_sign: bool) -> Vec<IdentityReport> {
    let gaps = power_mean_gaps(&p.spectrum.eigenvalues, p.n).expect("spectrum of R° has size N");
    let coef: T = gap_coefficient(p.n);
    let l1 = p.power_sums[0];
    let b3 = T::of(3.0) * p.bochner;
    let unit = p.expansion_w + gaps.gap3 + coef * l1 * gaps.gap2;
    let sixteen = T::of(16.0);
    let scaled = p.expansion_w + sixteen * gaps.gap3 + sixteen * coef * l1 * gaps.gap2;
    let mut out = vec![
        IdentityReport::equality("bochner-gap-form-literal", f(b3), f(unit), tol, ctx).audit().with_note(NOTE_BOCHNER),
        IdentityReport::equality("bochner-gap-form-scaled", f(b3), f(scaled), tol, ctx).audit().with_note(NOTE_BOCHNER),
    ];
    if gate_sign {
        out.push(IdentityReport::inequality("bochner-gap-nonnegative", f(unit), Relation::Ge, 0.0, tol, ctx));
    }
    out
}

/// Weyl cubic expansions of α and β for Einstein tensors. The β expansion is
/// reported twice: with the cross-term sign `+3s/(2n(n−1))` (gated) and with
/// `−3s/(2n(n−1))` (audit, suffix `-corrected`).
pub fn weyl_cubic_chain<T: Scalar>(p: &EinsteinProfile<T>, ctx: Context, tol: f64) -> Vec<IdentityReport> {
    let n: T = cast(p.n);
    let one = T::one();
    let s = p.s;
    let s3 = s * s * s;
    let nm1 = n - one;
    let d = n * n * nm1 * nm1;
    let alpha_rhs = p.weyl_cubic_1 + T::of(6.0) * s / (n * nm1) * p.norm_r_sq - T::of(8.0) * s3 / d;
    let cross = T::of(3.0) * s / (T::of(2.0) * n * nm1) * p.norm_r_sq;
    let beta_rhs = p.weyl_cubic_2 + cross + (n - T::of(5.0)) * s3 / d;
    let beta_fixed = p.weyl_cubic_2 - cross + (n + one) * s3 / d;
    vec![
        IdentityReport::equality("alpha-weyl-expansion", f(p.alpha), f(alpha_rhs), tol, ctx),
        IdentityReport::equality("beta-weyl-expansion", f(p.beta), f(beta_rhs), tol, ctx),
        IdentityReport::equality("beta-weyl-expansion-corrected", f(p.beta), f(beta_fixed), tol, ctx).audit(),
    ]
}

/// Low-dimensional consequences of the Weyl expansions (n ∈ {4, 5}): the
/// α–β relation, the cubic trace relation and the spectral form of
/// ⟨ΔR,R⟩, each as printed (gated) and with the corrected β expansion (audit).
pub fn low_dim_chain<T: Scalar>(
    p: &EinsteinProfile<T>,
    ctx: Context,
    tol: f64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    const ALLOWED: &[usize] = &[4, 5];
    if !ALLOWED.contains(&p.n) {
        return Err(IdentityError::WrongDim { n: p.n, allowed: ALLOWED });
    }
    let n: T = cast(p.n);
    let one = T::one();
    let two = T::of(2.0);
    let eight = T::of(8.0);
    let s = p.s;
    let s3 = s * s * s;
    let nm1 = n - one;
    let r2 = p.norm_r_sq;
    let [l1, l2, l3] = p.power_sums;
    let big = p.big_n();

    let printed_tail = T::of(3.0) * s / (n * nm1) * r2 - two * s3 / (n * n * nm1);
    let fixed_tail = T::of(9.0) * s / (n * nm1) * r2 - two * (n + T::of(5.0)) * s3 / (n * n * nm1 * nm1);
    let cube = eight * s3 / (n * n * n);
    let gap2 = l2 - l1 * l1 / big;
    let gap3 = l3 - l1 * l1 * l1 / (big * big);
    let spectral = |c: T| T::of(16.0) * (n - c) / (T::of(3.0) * nm1 * (n + two)) * l1 * gap2 + eight * gap3;

    let ab = |tail: T| two * p.beta + tail;
    let cubic = |tail: T| -T::of(6.0) * p.beta + tail + cube;
    Ok(vec![
        IdentityReport::equality("alpha-beta-relation", f(p.alpha), f(ab(printed_tail)), tol, ctx),
        IdentityReport::equality("cubic-trace-relation", f(eight * l3), f(cubic(printed_tail)), tol, ctx),
        IdentityReport::equality("bochner-spectral-form", f(p.bochner), f(spectral(T::of(4.0))), tol, ctx)
            .with_note(NOTE_BOCHNER),
        IdentityReport::equality("alpha-beta-relation-corrected", f(p.alpha), f(ab(fixed_tail)), tol, ctx).audit(),
        IdentityReport::equality("cubic-trace-relation-corrected", f(eight * l3), f(cubic(fixed_tail)), tol, ctx)
            .audit(),
        IdentityReport::equality("bochner-spectral-form-corrected", f(p.bochner), f(spectral(T::of(10.0))), tol, ctx)
            .audit()
            .with_note(NOTE_BOCHNER),
    ])
}

/// `Σ_α |B_α W|²` over the standard S₀² basis against `2(n²+n−8)/n · |W|²`.
pub fn weyl_basis_sum_check<T: Scalar>(
    w: &Curvature<T>,
    ctx: Context,
    tol: f64,
) -> Result<IdentityReport, IdentityError> {
    require_weyl(w)?;
    let basis = Sym2Basis::<T>::s2_0(w.dim());
    let mut lhs = T::zero();
    for b in basis.elements() {
        lhs += apply_sym2(b, w.tensor())?.norm_sq();
    }
    let n: T = cast(w.dim());
    let rhs = T::of(2.0) * (n * n + n - T::of(8.0)) / n * w.norm_sq();
    Ok(IdentityReport::equality("weyl-basis-sum", f(lhs), f(rhs), tol, ctx))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivationBound<T> {
    pub ratio: T,
    pub bound: T,
    pub holds: bool,
}

/// `|SW|² / (|S|²|W|²)` against `8(n−2)/n`.
pub fn weyl_derivation_bound<T: Scalar>(
    w: &Curvature<T>,
    s: &TraceFree<T>,
    tol: T,
) -> Result<DerivationBound<T>, IdentityError> {
    require_weyl(w)?;
    let wn = w.norm_sq();
    if wn == T::zero() {
        return Err(IdentityError::ZeroWeyl);
    }
    let sn = s.inner().dot(s.inner());
    let ratio = apply_sym2(s.inner(), w.tensor())?.norm_sq() / (sn * wn);
    let n: T = cast(w.dim());
    let bound = T::of(8.0) * (n - T::of(2.0)) / n;
    Ok(DerivationBound { ratio, bound, holds: ratio <= bound * (T::one() + tol) })
}

/// Gram matrix `Q_ab = ⟨B_a W, B_b W⟩` over S₀², so that `|SW|² = cᵀQc` for
/// coordinates `c` of S. Makes bulk sampling of the derivation bound cheap.
#[derive(Clone, Debug)]
pub struct WeylGram<T> {
    size: usize,
    q: Vec<T>,
    norm_sq: T,
}

impl<T: Scalar> WeylGram<T> {
    pub fn new(w: &Curvature<T>) -> Result<Self, IdentityError> {
        require_weyl(w)?;
        let basis = Sym2Basis::<T>::s2_0(w.dim());
        let images = basis.elements().iter().map(|b| apply_sym2(b, w.tensor())).collect::<Result<Vec<_>, _>>()?;
        let m = images.len();
        let mut q = vec![T::zero(); m * m];
        for a in 0..m {
            for b in a..m {
                let v = images[a].dot(&images[b]);
                q[a * m + b] = v;
                q[b * m + a] = v;
            }
        }
        Ok(Self { size: m, q, norm_sq: w.norm_sq() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `|SW|² / (|S|²|W|²)` for S with the given coordinates.
    pub fn ratio(&self, c: &[T]) -> T {
        let m = self.size;
        let mut acc = T::zero();
        for a in 0..m {
            let mut row = T::zero();
            for b in 0..m {
                row += self.q[a * m + b] * c[b];
            }
            acc += row * c[a];
        }
        let cn: T = c.iter().map(|&x| x * x).sum();
        acc / (cn * self.norm_sq)
    }
}

/// `Σ W_tpsq W_tpkl W_sqkl − 2 Σ W_tspq W_tjpl W_sjql`.
pub fn jack_parker_residual<T: Scalar>(w: &Curvature<T>) -> Result<T, IdentityError> {
    require_weyl(w)?;
    let t = w.tensor();
    let c1 = cubic_contraction(t, t, t, "tpsq,tpkl,sqkl")?;
    let c2 = cubic_contraction(t, t, t, "tspq,tjpl,sjql")?;
    Ok(c1 - T::of(2.0) * c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{random_curvature, random_einstein, random_weyl, unit_curvature, ModelSpace};

    const CTX: Context = Context { n: 4, seed: 0, einstein: true };

    #[test]
    fn sphere_bochner_value_vanishes() {
        let r = unit_curvature::<f64>(4);
        assert!(bochner_value(&r, &r).unwrap().abs() < 1e-11);
        let z = Curvature::zeros(4);
        assert_eq!(bochner_value(&r, &z).unwrap(), 0.0);
    }

    #[test]
    fn sphere_quadratic_form_is_288() {
        let r = unit_curvature::<f64>(4);
        let rep = quadratic_form_check(&r, &r, CTX, 1e-10).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!((rep.lhs - 288.0).abs() < 1e-10);
        assert!((rep.rhs - 288.0).abs() < 1e-10);
    }

    #[test]
    fn sphere_traces_are_nine() {
        let r = unit_curvature::<f64>(4);
        let reps = trace_checks(&r, CTX, 1e-10).unwrap();
        for rep in reps {
            assert!(rep.passed);
            assert!((rep.lhs - 9.0).abs() < 1e-11 && (rep.rhs - 9.0).abs() < 1e-11);
        }
    }

    #[test]
    fn traces_need_einstein() {
        let r = random_curvature::<f64>(5, 2);
        assert!(matches!(trace_checks(&r, CTX, 1e-8), Err(IdentityError::NotEinstein { .. })));
        assert!(trace_one_check(&r, CTX, 1e-8).passed);
    }

    #[test]
    fn gaps_of_simple_spectra() {
        let g = power_mean_gaps(&[1.0f64; 9], 4).unwrap();
        assert!(g.gap2.abs() < 1e-15 && g.gap3.abs() < 1e-15);
        let mut e = [0.0f64; 9];
        e[8] = 1.0;
        let g = power_mean_gaps(&e, 4).unwrap();
        assert!((g.gap2 - 8.0 / 9.0).abs() < 1e-15);
        assert!((g.gap3 - 80.0 / 81.0).abs() < 1e-15);
        assert!(matches!(power_mean_gaps(&e, 5), Err(IdentityError::SizeMismatch { .. })));
    }

    #[test]
    fn einstein_identities_hold() {
        let r = random_einstein::<f64>(5, 7.0, 3).unwrap();
        let p = EinsteinProfile::new(&r).unwrap();
        for rep in einstein_chain(&p, CTX, 1e-8) {
            assert!(rep.passed, "{rep:?}");
        }
        let w = weyl_cubic_chain(&p, CTX, 1e-8);
        assert!(w[0].passed && w[2].passed);
        assert!(!w[1].passed);
        let low = low_dim_chain(&p, CTX, 1e-8).unwrap();
        assert!(low[3..].iter().all(|r| r.passed), "{low:?}");
    }

    #[test]
    fn low_dim_chain_rejects_six() {
        let r = random_einstein::<f64>(6, 1.0, 3).unwrap();
        let p = EinsteinProfile::new(&r).unwrap();
        assert!(matches!(low_dim_chain(&p, CTX, 1e-8), Err(IdentityError::WrongDim { n: 6, .. })));
    }

    #[test]
    fn flat_low_dim_chain_is_trivial() {
        let r = ModelSpace::Flat { n: 4 }.build::<f64>().unwrap();
        let p = EinsteinProfile::new(&r).unwrap();
        for rep in low_dim_chain(&p, CTX, 1e-12).unwrap() {
            assert_eq!((rep.lhs, rep.rhs), (0.0, 0.0));
        }
    }

    #[test]
    fn weyl_basis_sum_coefficients() {
        let w = random_weyl::<f64>(4, 1).unwrap();
        let rep = weyl_basis_sum_check(&w, CTX, 1e-9).unwrap();
        assert!(rep.passed);
        assert!((rep.rhs / w.norm_sq() - 6.0).abs() < 1e-12);
        let r = random_curvature::<f64>(4, 1);
        assert!(matches!(weyl_basis_sum_check(&r, CTX, 1e-9), Err(IdentityError::NotWeyl { .. })));
    }

    #[test]
    fn derivation_bound_on_diagonal_element() {
        let w = random_weyl::<f64>(4, 2).unwrap();
        let basis = Sym2Basis::<f64>::s2_0(4);
        let s = TraceFree::new(basis.get(6).clone(), 1e-12).unwrap();
        let b = weyl_derivation_bound(&w, &s, 1e-12).unwrap();
        assert_eq!(b.bound, 4.0);
        assert!(b.holds);
        let gram = WeylGram::new(&w).unwrap();
        let mut c = vec![0.0; 9];
        c[6] = 1.0;
        assert!((gram.ratio(&c) - b.ratio).abs() < 1e-12);
        let zero = Curvature::zeros(4);
        assert!(matches!(weyl_derivation_bound(&zero, &s, 1e-12), Err(IdentityError::ZeroWeyl)));
    }

    #[test]
    fn jack_parker_low_dims() {
        for n in [4, 5] {
            let w = random_weyl::<f64>(n, 9).unwrap();
            let scale = w.norm_sq().powf(1.5);
            assert!(jack_parker_residual(&w).unwrap().abs() <= 1e-9 * scale);
        }
    }
}
