use std::process::{Command, Output};

use serde_json::Value;

fn toticay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toticay"))
        .args(args)
        .env_remove("TOTICAY_BUDGET_SECS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = toticay(args);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

fn computed<'a>(report: &'a Value, field: &str) -> &'a Value {
    let fields = report["fields"].as_array().unwrap();
    &fields.iter().find(|f| f["field"] == field).unwrap()["computed"]
}

#[test]
fn params_three_fifteen() {
    let (r, code) = json(&["params", "--p", "3", "--m", "15", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(computed(&r, "gamma")["value"], 4);
    assert_eq!(computed(&r, "gamma_t")["value"], 5);
    assert_eq!(computed(&r, "gamma_c")["value"], 5);
    assert_eq!(computed(&r, "diam")["value"], 2);
    assert_eq!(r["schema_version"], 1);
}

#[test]
fn params_reports_nonexistent_connected_domination() {
    let out = toticay(&["params", "--p", "2", "--m", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.starts_with("gamma_c")).unwrap();
    assert!(line.contains("does not exist"), "{line}");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(toticay(&["params", "--p", "4", "--m", "8"]).status.code(), Some(64));
    assert_eq!(toticay(&["params", "--p", "3"]).status.code(), Some(64));
    assert_eq!(toticay(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(toticay(&["witness", "--p", "3", "--m", "15", "--table", "dia3"]).status.code(), Some(64));
    assert_eq!(toticay(&["witness", "--p", "2", "--m", "30", "--table", "dia9"]).status.code(), Some(64));
    assert_eq!(toticay(&["--help"]).status.code(), Some(0));
}

#[test]
fn unwritable_output_exits_74() {
    let out = toticay(&["verify", "--p", "3", "--m", "9", "--out", "/nonexistent/dir/report.json"]);
    assert_eq!(out.status.code(), Some(74));
}

#[test]
fn verify_writes_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let out = toticay(&[
        "verify",
        "--p",
        "3",
        "--m",
        "15",
        "--out",
        report.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["exit_code"], 0);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 1);
    let rows: Vec<String> = std::fs::read_to_string(&csv).unwrap().lines().map(String::from).collect();
    assert_eq!(rows[0], "p,m,n,k,diam,gamma,gamma_t,gamma_c,v_gamma,v_gamma_t,v_gamma_c,v_diam");
    assert_eq!(rows[1], "3,15,45,16,2,4,5,5,match,match,match,match");
}

#[test]
fn verify_core_suite_flags_the_known_mismatch() {
    let (doc, code) = json(&["verify", "--suite", "core", "--json"]);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 10);
    // Instance order follows the suite list.
    assert_eq!((reports[0]["instance"]["p"].as_u64(), reports[0]["instance"]["m"].as_u64()), (Some(2), Some(2)));
    // (3, 18): gamma_c is 6 against a claimed 7, so the run exits 1.
    let r318 = reports.iter().find(|r| r["instance"]["m"] == 18 && r["instance"]["p"] == 3).unwrap();
    assert_eq!(computed(r318, "gamma_c")["value"], 6);
    assert_eq!(code, 1);
    assert_eq!(doc["exit_code"], 1);
}

#[test]
fn tiny_budget_is_reported() {
    let (doc, code) = json(&["verify", "--p", "3", "--m", "30", "--budget-secs", "1", "--json"]);
    let r = &doc["reports"][0];
    assert_eq!(computed(r, "gamma_c")["kind"], "interval");
    // The computed upper bound already rules out the claimed 12.
    assert_eq!(code, 1);
}

#[test]
fn budget_env_var_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_toticay"))
        .args(["params", "--p", "3", "--m", "30", "--json"])
        .env("TOTICAY_BUDGET_SECS", "1")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(computed(&r, "gamma_c")["kind"], "interval");
}

#[test]
fn inconclusive_exits_2() {
    // (3, 105) with no time at all: every domination number stays an
    // interval whose lower end is below the claimed range.
    let (r, code) = json(&["params", "--p", "3", "--m", "105", "--budget-secs", "0", "--json"]);
    assert_eq!(computed(&r, "diam")["value"], 2);
    let verdicts: Vec<&str> =
        r["fields"].as_array().unwrap().iter().map(|f| f["verdict"].as_str().unwrap()).collect();
    assert!(!verdicts.contains(&"mismatch"));
    assert!(verdicts.contains(&"inconclusive"));
    assert_eq!(code, 2);
}

#[test]
fn witness_audit_is_non_fatal_unless_strict() {
    let out = toticay(&["witness", "--p", "2", "--m", "30", "--table", "dia1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("420 eligible pairs"), "{text}");
    let strict = toticay(&["witness", "--p", "2", "--m", "30", "--table", "dia1", "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
    let clean = toticay(&["witness", "--p", "2", "--m", "30", "--table", "dia2", "--strict"]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn witness_json_tallies() {
    let (w, code) = json(&["witness", "--p", "3", "--m", "105", "--table", "dia3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(w["eligible"], 16380);
    let rows = w["rows"].as_array().unwrap();
    let classified: u64 = rows.iter().map(|r| r["classified"].as_u64().unwrap()).sum();
    assert_eq!(classified + w["unclassified"].as_u64().unwrap(), 16380);
}

#[test]
fn lambda_values() {
    for (m, l) in [("15", 2), ("105", 4), ("30", 5)] {
        let (v, _) = json(&["lambda", "--m", m, "--json"]);
        assert_eq!(v["lambda"], l);
    }
    let out = toticay(&["lambda", "--m", "30"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("lambda(30) = 5"));
}

#[test]
fn build_and_export() {
    let (b, code) = json(&["build", "--p", "2", "--m", "30", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(b["n"], 60);
    assert_eq!(b["degree"], 8);
    assert_eq!(b["component_sizes"], serde_json::json!([30, 30]));
    assert_eq!(b["diameter"], 3);

    let dot = String::from_utf8(toticay(&["export", "--p", "3", "--m", "3"]).stdout).unwrap();
    assert!(dot.trim_start().starts_with("graph"));
    // 9 vertices of degree 4.
    assert_eq!(dot.matches("--").count(), 18);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let out = toticay(&["export", "--p", "3", "--m", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!std::fs::read_to_string(&path).unwrap().is_empty());
}
