use std::process::{Command, Output};

use serde_json::Value;

fn curvop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvop")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["identities", "--dims", "3"][..],
        &["identities", "--trials", "0"],
        &["identities", "--tol", "-1"],
        &["spectrum", "--model", "torus"],
        &["spectrum"],
        &["extremal", "--jobs", "0"],
        &["minimize", "--N", "5"],
        &["table", "--n-range", "3..9"],
        &["no-such-command"],
    ] {
        assert_eq!(curvop(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sphere_spectrum_is_constant() {
    let out = curvop(&["spectrum", "--model", "sphere", "--dim", "4", "--kappa", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tool"], "curvop");
    let eig = v["results"]["eigenvalues"].as_array().unwrap();
    assert_eq!(eig.len(), 9);
    assert!(eig.iter().all(|x| (x.as_f64().unwrap() - 1.0).abs() < 1e-12));
    let verdicts = v["results"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 5);
    assert!(verdicts.iter().all(|d| d["nonnegative"] == true));
}

#[test]
fn flat_spectrum_is_zero() {
    let v = json(&curvop(&["spectrum", "--model", "flat", "--dim", "7"]));
    let eig = v["results"]["eigenvalues"].as_array().unwrap();
    assert_eq!(eig.len(), 27);
    assert!(eig.iter().all(|x| x.as_f64().unwrap() == 0.0));
}

#[test]
fn dumped_tensor_loads_to_same_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("einstein.json");
    let p = path.to_str().unwrap();
    let a = json(&curvop(&["spectrum", "--random", "einstein", "--dim", "5", "--seed", "4", "--dump", p]));
    let b = json(&curvop(&["spectrum", "--load", p]));
    assert_eq!(a["results"]["eigenvalues"], b["results"]["eigenvalues"]);
    assert_eq!(b["results"]["einstein"], true);
    assert_eq!(b["results"]["monotone"], true);
}

#[test]
fn identities_report_the_sign_discrepancy() {
    let out = curvop(&["identities", "--dims", "4", "--trials", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let reports = v["results"]["reports"].as_array().unwrap();
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| r["passed"] == false && r["kind"] == "identity")
        .map(|r| r["identity_id"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"beta-weyl-expansion"));
    assert!(!failing.contains(&"quadratic-form-expansion"));
    assert!(reports.iter().any(|r| r["identity_id"] == "beta-weyl-expansion-corrected" && r["passed"] == true));
}

#[test]
fn extremal_minimize_table_pass() {
    for args in [
        &["extremal", "--dims", "4..8", "--starts", "16"][..],
        &["minimize", "--n", "8", "--oracle", "grid", "--resolution", "40"],
        &["minimize", "--N", "6", "--k2", "2", "--B", "-0.05"],
        &["table", "--n-range", "4..60"],
    ] {
        let out = curvop(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn csv_has_preamble_and_fixed_columns() {
    let out = curvop(&["table", "--n-range", "11..12", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# tool curvop "));
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "n,N,k2,B,F_zero_block,F_spike,verdict,candidate_f_values,route,cross_checked");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 3);
}
