//! End-to-end checks of the command-line interface: exit codes, output
//! formats, and report determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hecke-fusion"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_reports_success_and_is_reproducible() {
    let args = [
        "verify",
        "--suites",
        "crossing,f-series",
        "--max-n",
        "2",
        "--trunc",
        "4",
        "--seed",
        "9",
    ];
    let a = run(&args);
    assert!(a.status.success(), "stderr: {}", String::from_utf8_lossy(&a.stderr));
    let report = stdout_json(&a);
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["config"]["seed"], 9);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");
}

#[test]
fn verify_rejects_unknown_suites_and_bad_limits() {
    let out = run(&["verify", "--suites", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));

    let out = run(&["verify", "--suites", "crossing", "--max-m", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "--suites", "crossing", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_the_historical_sandwich_alias() {
    let out = run(&[
        "verify", "--suites", "lemma-RE", "--max-m", "2", "--max-n", "2",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["config"]["suites"][0], "sandwich");
    assert_eq!(report["summary"]["failed"], 0);
}

#[test]
fn verify_timings_are_opt_in() {
    let quiet = run(&["verify", "--suites", "f-series", "--trunc", "4"]);
    let timed = run(&[
        "verify", "--suites", "f-series", "--trunc", "4", "--timings",
    ]);
    assert!(stdout_json(&quiet)["cases"][0].get("time_ms").is_none());
    assert!(stdout_json(&timed)["cases"][0].get("time_ms").is_some());
}

#[test]
fn verify_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("hecke-fusion-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--suites",
        "crossing",
        "--max-n",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
}

#[test]
fn idempotent_routes_agree_and_zero_is_annotated() {
    let fused = run(&["idempotent", "--partition", "2", "--n", "2", "--method", "fusion"]);
    let direct = run(&[
        "idempotent", "--partition", "2", "--n", "2", "--method", "recurrence",
    ]);
    assert!(fused.status.success());
    assert_eq!(fused.stdout, direct.stdout);
    let doc = stdout_json(&fused);
    assert!(!doc["entries"].as_array().unwrap().is_empty());
    assert!(doc.get("note").is_none());

    let tall = run(&["idempotent", "--partition", "1,1,1", "--n", "2"]);
    assert!(tall.status.success());
    let doc = stdout_json(&tall);
    assert!(doc["entries"].as_array().unwrap().is_empty());
    assert!(doc["note"].as_str().unwrap().contains("zero"));
}

#[test]
fn idempotent_rejects_bad_input() {
    let out = run(&["idempotent", "--partition", "2,,1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["idempotent", "--partition", "2", "--tableau", "5", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["idempotent", "--partition", "2", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn qchar_formal_lists_the_two_single_box_monomials() {
    let out = run(&["qchar", "--partition", "1", "--n", "2", "--mode", "formal"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    for t in terms {
        assert_eq!(t["coefficient"], 1);
    }
}

#[test]
fn qchar_hc_has_the_documented_window() {
    let out = run(&[
        "qchar", "--partition", "1", "--n", "1", "--mode", "hc", "--trunc", "3",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["floor"], -6);
}

#[test]
fn qchar_wakimoto_needs_and_validates_kappa() {
    let missing = run(&["qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto"]);
    assert_eq!(missing.status.code(), Some(2));

    let dir = std::env::temp_dir().join("hecke-fusion-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let good = dir.join("kappa-trivial.json");
    std::fs::write(
        &good,
        r#"{"kappa_plus": [["1"], ["1"]], "kappa_minus": ["1"]}"#,
    )
    .unwrap();
    let out = run(&[
        "qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto",
        "--kappa", good.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    // Trivial bosons give the balanced q-integer [2]_q, exact.
    assert_eq!(doc["floor"], Value::Null);
    assert_eq!(doc["coeffs"][0][0], 0);
    assert_eq!(doc["coeffs"][0][1], "q + q^-1");

    let dead = dir.join("kappa-dead.json");
    std::fs::write(&dead, r#"{"kappa_plus": [["1"], ["1"]], "kappa_minus": ["0"]}"#).unwrap();
    let out = run(&[
        "qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto",
        "--kappa", dead.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let short = dir.join("kappa-short.json");
    std::fs::write(&short, r#"{"kappa_plus": [["1"]], "kappa_minus": ["1"]}"#).unwrap();
    let out = run(&[
        "qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto",
        "--kappa", short.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
