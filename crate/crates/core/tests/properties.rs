use curvop::curvature::{random_curvature, random_einstein, random_weyl, Curvature, ModelSpace};
use curvop::operator::{
    apply_second_kind, jacobi_eigh, op_second_kind, op_second_kind_by_action, op_second_kind_in, spectrum, Sym2Basis,
};
use curvop::sequence::f_eval;
use proptest::prelude::*;

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn orthogonal(m: usize, seed: u64) -> Vec<f64> {
    let r = random_curvature::<f64>(4, seed);
    let raw = r.tensor().as_slice();
    let mut sym = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..=i {
            let v = raw[(i * 7 + j * 13) % raw.len()] + (i + 2 * j) as f64 * 0.01;
            sym[i * m + j] = v;
            sym[j * m + i] = v;
        }
    }
    jacobi_eigh(&sym, m).unwrap().vectors
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spectrum_is_basis_independent(n in 4usize..7, seed in any::<u64>()) {
        let r = random_curvature::<f64>(n, seed);
        let base = Sym2Basis::s2_0(n);
        let q = orthogonal(base.len(), seed ^ 1);
        let turned = base.rotated(&q);
        prop_assert!(turned.gram_residual() < 1e-12);
        let a = spectrum(&op_second_kind(&r)).unwrap();
        let b = spectrum(&op_second_kind_in(&r, &turned)).unwrap();
        let scale = 1.0 + a.eigenvalues.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        prop_assert!(max_diff(&a.eigenvalues, &b.eigenvalues) < 1e-11 * scale);
    }

    #[test]
    fn operator_is_self_adjoint(n in 3usize..8, seed in any::<u64>()) {
        let m = op_second_kind(&random_curvature::<f64>(n, seed));
        prop_assert!(m.symmetry_residual() < 1e-12 * (1.0 + m.frobenius()));
    }

    #[test]
    fn action_and_bilinear_forms_agree(n in 3usize..7, seed in any::<u64>()) {
        let r = random_curvature::<f64>(n, seed);
        let a = op_second_kind(&r);
        let b = op_second_kind_by_action(&r);
        prop_assert!(max_diff(a.entries(), b.entries()) < 1e-12 * (1.0 + a.frobenius()));
    }

    #[test]
    fn action_preserves_symmetry(n in 3usize..7, seed in any::<u64>()) {
        let r = random_curvature::<f64>(n, seed);
        let s = Sym2Basis::<f64>::s2_0(n).get(0).clone();
        let out = apply_second_kind(&r, &s);
        for i in 0..n {
            for j in 0..n {
                prop_assert!((out.get(i, j) - out.get(j, i)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn decomposition_is_orthogonal(n in 4usize..8, seed in any::<u64>()) {
        let r = random_curvature::<f64>(n, seed);
        let d = r.decompose();
        let (w, e, u) = (&d.weyl, d.ricci_part(), d.scalar_part());
        let tol = 1e-12 * (1.0 + r.norm_sq());
        prop_assert!(w.dot(&e).abs() < tol);
        prop_assert!(w.dot(&u).abs() < tol);
        prop_assert!(e.dot(&u).abs() < tol);
        let back = d.reassemble();
        prop_assert!((&back - &r).norm_sq() < tol);
        prop_assert!(w.ricci().norm() < 1e-12 * (1.0 + r.norm_sq()));
    }

    #[test]
    fn spectrum_scales_linearly(n in 4usize..6, seed in any::<u64>(), t in 0.1f64..10.0) {
        let r = random_curvature::<f64>(n, seed);
        let a = spectrum(&op_second_kind(&r)).unwrap();
        let b = spectrum(&op_second_kind(&(&r * t))).unwrap();
        let want: Vec<f64> = a.eigenvalues.iter().map(|x| x * t).collect();
        let scale = 1.0 + want.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        prop_assert!(max_diff(&want, &b.eigenvalues) < 1e-11 * scale);
    }

    #[test]
    fn f_is_cubically_homogeneous(
        lambdas in prop::collection::vec(-2.0f64..2.0, 1..20),
        b in -1.0f64..1.0,
        c in 0.0f64..3.0,
        t in 0.01f64..10.0,
    ) {
        let scaled: Vec<f64> = lambdas.iter().map(|x| x * t).collect();
        let lhs = f_eval(&scaled, b, t * c);
        let rhs = t.powi(3) * f_eval(&lambdas, b, c);
        prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()));
    }

    #[test]
    fn weyl_tensors_are_totally_trace_free(n in 4usize..8, seed in any::<u64>()) {
        let w = random_weyl::<f64>(n, seed).unwrap();
        prop_assert!(w.ricci().norm() < 1e-12 * (1.0 + w.norm_sq().sqrt()));
        prop_assert!(w.residuals().bianchi < 1e-12);
    }
}

#[test]
fn einstein_tensors_are_einstein() {
    for n in 4..9 {
        let r = random_einstein::<f64>(n, 3.0, n as u64).unwrap();
        assert!(r.is_einstein(1e-10));
        assert!((r.scalar() - 3.0).abs() < 1e-12);
    }
}

#[test]
fn single_precision_sphere() {
    let r: Curvature<f32> = ModelSpace::Sphere { n: 4, kappa: 1.0 }.build().unwrap();
    let sp = spectrum(&op_second_kind(&r)).unwrap();
    assert_eq!(sp.len(), 9);
    assert!(sp.eigenvalues.iter().all(|x| (x - 1.0).abs() < 1e-5));
}

#[test]
fn single_and_double_precision_agree() {
    let r = random_curvature::<f64>(5, 11);
    let a = spectrum(&op_second_kind(&r)).unwrap();
    let b = spectrum(&op_second_kind(&r.cast::<f32>())).unwrap();
    for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
        assert!((x - *y as f64).abs() < 1e-4 * (1.0 + x.abs()));
    }
}
