use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env_remove("VERIFY_TOL_SCALE")
        .output()
        .expect("spawn verify")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn identities_pass_with_csv_header() {
    let out = verify(&["identities"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check_name,computed,reference,residual,tolerance,passed"));
    assert!(text.contains("two_squares_identity[N=200]"));
    assert!(text.contains("limit_identity[N=1000000]"));
}

#[test]
fn json_output_is_an_array_of_reports() {
    let out = verify(&["--json", "hilbert", "--depth", "1", "--function", "b1=1", "--grid", "256"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["passed"], serde_json::Value::Bool(true));
        assert!(r["check_name"].is_string());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["conjecture", "--points", "50"];
    assert_eq!(verify(&args).stdout, verify(&args).stdout);
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        vec!["conjecture", "--x-min", "1", "--x-max", "1"],
        vec!["conjecture", "--x-min", "-1"],
        vec!["identities", "--n-coeff", "100000"],
        vec!["figure", "--points", "8"],
        vec!["hilbert", "--depth", "1", "--function", "c1=1"],
        vec!["hilbert", "--depth", "0", "--function", "a1=1"],
        vec!["no-such-command"],
    ] {
        let out = verify(&args);
        assert_eq!(code(&out), 2, "{args:?}");
    }
}

#[test]
fn unwritable_figure_path_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("missing").join("f.csv");
    let svg = dir.path().join("f.svg");
    let out = verify(&[
        "figure",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn tolerance_scale_env() {
    let bin = env!("CARGO_BIN_EXE_verify");
    let run = |scale: &str| {
        Command::new(bin)
            .args(["identities", "--n-coeff", "20"])
            .env("VERIFY_TOL_SCALE", scale)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("2")), 0);
    // The limit residual cannot meet a tolerance shrunk by 1e30.
    assert_eq!(code(&run("1e-30")), 1);
    assert_eq!(code(&run("-1")), 2);
    assert_eq!(code(&run("abc")), 2);
}

#[test]
fn all_writes_figure_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["all", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("figure1.csv").exists());
    assert!(dir.path().join("figure1.svg").exists());
}
