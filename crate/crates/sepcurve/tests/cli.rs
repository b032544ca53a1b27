//! End-to-end tests of the `sepcurve` binary: exit codes, JSON output
//! shape, determinism, and file-based input.

use std::process::{Command, Output};

use sepcurve::cli::{ClassifyDocument, CorpusEntry, IdentityDoc, ReportDocument, WitnessDoc};

fn sepcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("sepcurve-cli-{}-{name}", std::process::id()))
}

#[test]
fn analyze_reports_height_bounds() {
    let out = sepcurve(&["analyze", "--json", "--genus", "2", "x^5 - 5*x", "y^2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let doc: ReportDocument = serde_json::from_str(&stdout_str(&out)).expect("valid report JSON");
    assert_eq!(doc.n, 5);
    assert_eq!(doc.m, 2);
    assert_eq!(doc.s0, "1/2");
    assert_eq!(doc.verdict.kind, "HeightBounded");
    assert_eq!(doc.verdict.bounds, Some([4, 10]));
}

#[test]
fn analyze_json_round_trips() {
    let out = sepcurve(&["analyze", "--json", "x^3 - 3*x", "y^2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_str(&stdout_str(&out)).expect("valid report JSON");
    let again: ReportDocument =
        serde_json::from_str(&serde_json::to_string(&doc).expect("serializable"))
            .expect("round-trips");
    assert_eq!(again, doc);
}

#[test]
fn analyze_is_deterministic() {
    let run = || {
        let out = sepcurve(&["analyze", "--json", "--genus", "1", "x^4 + x", "y^3 - 2"]);
        assert_eq!(out.status.code(), Some(0));
        let mut doc: ReportDocument =
            serde_json::from_str(&stdout_str(&out)).expect("valid report JSON");
        doc.timing_ms = 0;
        doc
    };
    assert_eq!(run(), run());
}

#[test]
fn classify_gate_requires_equal_degrees() {
    let out = sepcurve(&["classify", "x^3", "y^2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr_str(&out).contains("Theorem 3 requires n = m"),
        "stderr was: {}",
        stderr_str(&out)
    );
}

#[test]
fn classify_conic_attaches_witness() {
    let out = sepcurve(&["classify", "--json", "x^2", "y^2 + 1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let doc: ClassifyDocument = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert_eq!(doc.verdict.kind, "NonconstantExists");
    assert!(doc.verdict.cases.contains(&"E".to_string()));
    let w = doc.witness.expect("witness attached");
    assert!(w.f.is_some() && w.g.is_some());
}

#[test]
fn witness_command_produces_pair() {
    let out = sepcurve(&["witness", "--json", "x^2", "y^2 + 1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: WitnessDoc = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert!(doc.f.is_some() && doc.g.is_some());
}

#[test]
fn parse_error_exits_2() {
    let out = sepcurve(&["analyze", "x^^2", "y^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("error:"));
}

#[test]
fn missing_arguments_exit_2() {
    let out = sepcurve(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_from_input_file() {
    let path = temp_path("verify.json");
    std::fs::write(
        &path,
        r#"{"P": "x^3", "Q": ["0", "0", "1"], "genus": 0, "f": "t^2", "g": "t^3"}"#,
    )
    .expect("writable temp file");
    let out = sepcurve(&["verify", "--json", "--input", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let doc: IdentityDoc = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert!(doc.all_ok);
    assert!(doc.degree_relation_ok);
    assert_eq!(doc.height_f, 2);
    assert_eq!(doc.height_g, 3);
}

#[test]
fn verify_rejects_non_solution() {
    let out = sepcurve(&["verify", "x^2", "y^2", "t", "t + 1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_captures_per_entry_errors() {
    let path = temp_path("corpus.json");
    std::fs::write(
        &path,
        r#"[
            {"P": "x^5 - 5*x", "Q": "y^2", "genus": 2},
            {"P": "x^^2", "Q": "y^2", "genus": 0},
            {"P": ["0", "0", "1"], "Q": ["1", "0", "1"], "genus": 0}
        ]"#,
    )
    .expect("writable temp file");
    let out = sepcurve(&["corpus", "--json", "--input", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let entries: Vec<CorpusEntry> = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert_eq!(entries.len(), 3);
    assert!(entries[0].report.is_some() && entries[0].error.is_none());
    assert!(entries[1].report.is_none() && entries[1].error.is_some());
    assert!(entries[2].report.is_some());
}

#[test]
fn oracle_check_agrees_on_small_pair() {
    let out = sepcurve(&["oracle-check", "--json", "x^3 - 3*x", "y^2 - 1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(doc["ambiguous"], serde_json::Value::Bool(false));
    assert_eq!(doc["agree"], serde_json::Value::Bool(true));
}

#[test]
fn help_exits_0() {
    let out = sepcurve(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("analyze"));
}
