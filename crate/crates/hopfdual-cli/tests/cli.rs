//! End-to-end checks of the command-line contract: exit codes, parameter
//! validation messages, report shape, and deterministic output.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn parse_report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn verify_taft_passes_with_exit_zero() {
    let out = run(&[
        "verify",
        "--family",
        "taft",
        "--n",
        "3",
        "--v",
        "1",
        "--xi",
        "zeta3^1",
        "--suites",
        "hopf-axioms,dual-lemmas,theta",
        "--l-max",
        "4",
        "--lambda",
        "0,1,2,zeta3",
    ]);
    assert_eq!(
        exit_code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = parse_report(&out);
    assert_eq!(doc["config"]["family"], "taft");
    let suites = doc["suites"].as_array().unwrap();
    assert!(suites.len() >= 3);
    for s in suites {
        assert_eq!(
            s["status"], "pass",
            "suite {} failed: {:?}",
            s["id"], s["witnesses"]
        );
        assert!(s["cases_total"].as_u64().unwrap() > 0);
    }
}

#[test]
fn parity_violation_is_a_usage_error() {
    let out = run(&["verify", "--family", "dmx", "--m", "2", "--d", "1"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("(1+m)d must be even"), "stderr: {stderr}");
}

#[test]
fn unsupported_suite_for_family_is_a_usage_error() {
    let out = run(&["verify", "--family", "dihedral", "--suites", "proof-matrix"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("proof-matrix"), "stderr: {stderr}");

    let out = run(&[
        "verify", "--family", "taft", "--n", "3", "--v", "1", "--suites", "nonsense",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn invalid_root_is_a_usage_error() {
    // zeta3^0 = 1 is not a primitive cube root
    let out = run(&[
        "verify",
        "--family",
        "taft",
        "--n",
        "3",
        "--v",
        "1",
        "--xi",
        "zeta3^0",
        "--suites",
        "hopf-axioms",
    ]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("primitive"), "stderr: {stderr}");
}

#[test]
fn default_suites_skip_unsupported_ones() {
    // with no --suites, the dihedral family runs everything it supports
    // (proof-matrix is excluded rather than rejected)
    let out = run(&["verify", "--family", "dihedral", "--j-bound", "2"]);
    assert_eq!(
        exit_code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = parse_report(&out);
    let ids: Vec<String> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["id"].as_str().unwrap().to_string())
        .collect();
    assert!(ids.iter().any(|i| i == "gram"));
    assert!(ids.iter().all(|i| !i.starts_with("proof-matrix")));
    for s in doc["suites"].as_array().unwrap() {
        assert_eq!(s["status"], "pass", "suite {} failed", s["id"]);
    }
}

#[test]
fn gram_dihedral_reports_full_rank() {
    let out = run(&["gram", "--family", "dihedral", "--N", "1"]);
    assert_eq!(
        exit_code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = parse_report(&out);
    let suite = &doc["suites"][0];
    assert_eq!(suite["id"], "gram");
    assert_eq!(suite["status"], "pass");
    assert_eq!(suite["details"]["full_rank"], "true");
    assert_eq!(suite["details"]["dims"], "6x6");
}

#[test]
fn verification_failure_exits_one() {
    // In the degenerate Taft case v = 0 the skew parameter q is 1 and the
    // claimed nilpotency E1^m = 0 genuinely fails (m = 1, E1 != 0); the
    // harness must report it rather than mask it.
    let out = run(&[
        "verify",
        "--family",
        "taft",
        "--n",
        "2",
        "--v",
        "0",
        "--suites",
        "dual-lemmas",
        "--lambda",
        "0,1",
    ]);
    assert_eq!(
        exit_code(&out),
        1,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = parse_report(&out);
    let failed: Vec<_> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
}

fn normalized(doc: &mut Value) {
    for s in doc["suites"].as_array_mut().unwrap() {
        s["millis"] = Value::from(0u64);
    }
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let args = [
        "verify",
        "--family",
        "liu",
        "--n",
        "2",
        "--omega",
        "2",
        "--suites",
        "scalars,matrix-lemmas,hopf-axioms",
        "--j-bound",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let mut da = parse_report(&a);
    let mut db = parse_report(&b);
    normalized(&mut da);
    normalized(&mut db);
    assert_eq!(
        serde_json::to_string(&da).unwrap(),
        serde_json::to_string(&db).unwrap()
    );
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join("hopfdual-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--family",
        "dihedral",
        "--suites",
        "dual-lemmas",
        "--j-bound",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = std::fs::read_to_string(&path).unwrap();
    let doc: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(doc["suites"][0]["id"], "dual-lemmas/R5.8");
    assert_eq!(doc["suites"][0]["status"], "pass");
}
