use std::process::Command;

fn yangian() -> Command {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
}

#[test]
fn run_writes_a_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("current.json");
    let status = yangian()
        .args(["run", "current", "--omega", "C", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["tool"], "yangian");
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["records"].as_array().unwrap().len() > 3);
}

#[test]
fn report_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let status = yangian()
        .args(["run", "current", "--omega", "null(2)"])
        .env("YANGIAN_REPORT_DIR", dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.path().join("current.json").exists());
}

#[test]
fn negative_s_values_parse() {
    let dir = tempfile::tempdir().unwrap();
    let status = yangian()
        .args(["run", "projection", "--omega", "C", "--n-max", "3", "--s", "-1,5/2"])
        .env("YANGIAN_REPORT_DIR", dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}

#[test]
fn violated_axioms_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let status = yangian()
        .args(["run", "double", "--omega", "nonassoc_witness", "--fuzz-count", "5"])
        .env("YANGIAN_REPORT_DIR", dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        yangian().args(["run", "nonsense"]).output().unwrap().status.code(),
        Some(2)
    );
    assert_eq!(
        yangian()
            .args(["run", "pbw", "--omega", "nonassoc_witness"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        yangian()
            .args(["run", "pbw", "--n-min", "5", "--n-max", "3"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    assert_eq!(yangian().args(["frobnicate"]).output().unwrap().status.code(), Some(2));
}

#[test]
fn omega_check_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("c2.json");
    std::fs::write(
        &good,
        r#"{"name": "C2", "dim": 2, "basis": ["u1", "u2"], "table": [
            {"i": 0, "j": 0, "terms": [{"k": 0, "num": 1, "den": 1}]},
            {"i": 1, "j": 1, "terms": [{"k": 1, "num": 1, "den": 1}]}]}"#,
    )
    .unwrap();
    let out = yangian().args(["omega", "check"]).arg(&good).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("associative: yes") && text.contains("unital: yes"));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"dim": 1, "basis": ["u"], "table": [{"i": 0, "j": 0, "terms": [{"k": 3, "num": 1, "den": 1}]}]}"#,
    )
    .unwrap();
    let out = yangian().args(["omega", "check"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("table[0]"));
}

#[test]
fn dims_prints_the_graded_dimension() {
    let out = yangian()
        .args(["dims", "--omega", "direct_sum_C(3)", "--d", "2", "--grade", "2"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "108");
}
