use std::path::Path;
use std::process::{Command, Output};

fn jpk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jpk"))
        .args(args)
        .env_remove("JPK_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_jack_latex() {
    let o = jpk(&[
        "compute", "jack", "--r", "2", "--m", "2,0", "--format", "latex",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r"m_{(2,0)} + \frac{2d}{d+2} m_{(1,1)}");
}

#[test]
fn compute_ijack_text() {
    let o = jpk(&["compute", "ijack", "--r", "2", "--m", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "m_(1,0) - d/2");
}

#[test]
fn compute_jack_json_shape() {
    let o = jpk(&[
        "compute", "jack", "--r", "2", "--m", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["r"], 2);
    assert_eq!(v["basis"], "m");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms[0]["partition"], serde_json::json!([2, 0]));
    assert_eq!(
        terms[0]["coeff"],
        serde_json::json!({"num": ["1"], "den": ["1"]})
    );
    assert_eq!(terms[1]["partition"], serde_json::json!([1, 1]));
    assert_eq!(
        terms[1]["coeff"],
        serde_json::json!({"num": ["0", "2"], "den": ["2", "1"]})
    );
}

#[test]
fn compute_bernoulli_r1() {
    let o = jpk(&["compute", "bernoulli", "--r", "1", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "m_(2) - m_(1) + 1/6");
}

#[test]
fn binomial_family_with_one_is_phi() {
    let fam = jpk(&[
        "compute",
        "binomial-family",
        "--r",
        "2",
        "--m",
        "2,1",
        "--series",
        "one",
    ]);
    let phi = jpk(&["compute", "jack-phi", "--r", "2", "--m", "2,1"]);
    assert_eq!(fam.status.code(), Some(0));
    assert_eq!(stdout(&fam), stdout(&phi));
}

#[test]
fn binomial_family_needs_a_series() {
    let o = jpk(&["compute", "binomial-family", "--r", "2", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn partition_longer_than_r_is_invalid() {
    let o = jpk(&["compute", "jack", "--r", "2", "--m", "1,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("partition longer than r"));
}

#[test]
fn bad_inputs_exit_2() {
    for args in [
        &["compute", "jack", "--r", "2", "--m", "1,2"][..],
        &["compute", "jack", "--r", "0", "--m", "1"],
        &["compute", "jack", "--r", "2", "--m", "1", "--d", "0"],
        &["compute", "jack", "--r", "2", "--m", "1", "--d", "x/y"],
        &["verify", "no-such-suite", "--r", "2"],
        &["compute", "jack", "--m", "1"],
    ] {
        assert_eq!(jpk(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn pole_at_specialization_exits_3() {
    let o = jpk(&["compute", "jack", "--r", "2", "--m", "2,0", "--d", "-2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("pole at specialization"));
}

#[test]
fn verify_reports_pole_skips_with_exit_3() {
    let o = jpk(&[
        "verify",
        "sekiguchi-eigen",
        "--r",
        "2",
        "--d",
        "-2",
        "--max-weight",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("SKIP"));
}

#[test]
fn verify_sekiguchi_eigen_passes() {
    let o = jpk(&["verify", "sekiguchi-eigen", "--r", "2", "--max-weight", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("suite sekiguchi-eigen: pass=36 fail=0 skip=0"),
        "{out}"
    );
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_all_univariate() {
    let o = jpk(&[
        "verify",
        "all",
        "--r",
        "1",
        "--max-weight",
        "5",
        "--trunc",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("suite ").count(), 12);
}

#[test]
fn verify_lemma_sum_lists_samples() {
    let o = jpk(&["verify", "lemma-sum", "--r", "2", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("seed=7"));
    for subset in ["I={} ", "I={1} ", "I={2} ", "I={1,2} "] {
        let n = out
            .lines()
            .filter(|l| l.trim_start().starts_with(subset))
            .count();
        assert_eq!(n, 20, "{subset}");
    }
}

#[test]
fn verify_json_is_deterministic() {
    let args = [
        "verify",
        "twisted-raising",
        "--r",
        "2",
        "--max-weight",
        "3",
        "--format",
        "json",
    ];
    let a = jpk(&args);
    let b = jpk(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "twisted-raising");
    assert_eq!(v["suites"][0]["counts"]["fail"], 0);
}

#[test]
fn verify_latex_table() {
    let o = jpk(&[
        "verify",
        "psi-pieri",
        "--r",
        "2",
        "--max-weight",
        "1",
        "--format",
        "latex",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("% r=2 d=symbolic"));
    assert!(out.contains(r"\begin{tabular}{lll}"));
    assert!(out.contains(r"\texttt{psi-pieri}"));
}

#[test]
fn trace_goes_to_stderr() {
    let o = jpk(&[
        "verify",
        "sekiguchi-eigen",
        "--r",
        "2",
        "--max-weight",
        "1",
        "--trace",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let err = stderr(&o);
    assert!(
        err.contains("H[r=2,p=1] m_(0,0) l=0 I={} J={1} prefactor=2/d"),
        "{err}"
    );
    assert!(!stdout(&o).contains("H[r="));
}

fn run_cached(path: &Path, r: &str, m: &str) -> Output {
    jpk(&[
        "compute",
        "jack-psi",
        "--r",
        r,
        "--m",
        m,
        "--cache",
        path.to_str().unwrap(),
    ])
}

#[test]
fn cache_round_trip_and_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let cold = jpk(&["compute", "jack-psi", "--r", "2", "--m", "3,1"]);

    let first = run_cached(&path, "2", "3,1");
    assert_eq!(first.status.code(), Some(0));
    let stored = std::fs::read_to_string(&path).unwrap();
    let warm = run_cached(&path, "2", "3,1");
    assert_eq!(warm.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stored);
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, warm.stdout);

    let snap: serde_json::Value = serde_json::from_str(&stored).unwrap();
    assert_eq!(snap["version"], 1);
    assert_eq!(snap["r"], 2);
    assert_eq!(snap["d_mode"], "symbolic");
}

#[test]
fn cache_mismatch_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    assert_eq!(run_cached(&path, "2", "2").status.code(), Some(0));
    let o = run_cached(&path, "3", "2");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("r=2"));

    let o = jpk(&[
        "compute",
        "jack",
        "--r",
        "2",
        "--m",
        "2",
        "--d",
        "2",
        "--cache",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let mut snap: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    snap["version"] = 99.into();
    std::fs::write(&path, snap.to_string()).unwrap();
    assert_eq!(run_cached(&path, "2", "2").status.code(), Some(2));
}

#[test]
fn env_var_overrides_cache_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.json");
    let flag_path = dir.path().join("flag.json");
    let o = Command::new(env!("CARGO_BIN_EXE_jpk"))
        .args(["compute", "jack", "--r", "2", "--m", "2,1", "--cache"])
        .arg(&flag_path)
        .env("JPK_CACHE", &env_path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_path.exists());
    assert!(!flag_path.exists());
}

#[test]
fn wall_time_on_stderr_only() {
    let o = jpk(&["compute", "jack", "--r", "1", "--m", "3"]);
    assert!(stderr(&o).contains("wall time"));
    assert_eq!(stdout(&o).trim(), "m_(3)");
}
