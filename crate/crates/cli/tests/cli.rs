//! End-to-end runs of the installed binary: output shapes, exit codes, and
//! the three input channels (inline, file, stdin).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn tutte_of_k3_prints_polynomial() {
    let out = run(&["invariant", "--which", "tutte", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "Bw\ttutte\tX^2 + X + Y\n");
}

#[test]
fn json_rows_follow_the_schema() {
    let out = run(&["invariant", "--which", "chromatic", "--format", "json", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(value["graph"], "Bw");
    assert_eq!(value["invariant"], "chromatic");
    let terms = value["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    for term in terms {
        assert!(term["dx"].is_u64());
        assert!(term["dy"].is_u64());
        assert!(term["coeff"].is_string());
    }
}

#[test]
fn empty_input_emits_nothing_and_succeeds() {
    let out = run(&["invariant", "--which", "fk", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn malformed_line_reports_its_number() {
    let out = run(&["invariant", "--which", "tutte", "Bw\nB"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 2"));
}

#[test]
fn oriented_input_is_rejected_for_invariants() {
    let out = run(&["invariant", "--which", "tutte", "&AO"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 1"));
}

#[test]
fn file_input_yields_csv_rows() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "A_").unwrap();
    writeln!(file, "Bw").unwrap();
    let out = run(&[
        "invariant",
        "--which",
        "tutte",
        "--format",
        "csv",
        file.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph,invariant,dx,dy,coeff"));
    assert_eq!(lines.next(), Some("A_,tutte,1,0,1"));
    assert!(text.lines().count() > 2, "K3 contributes more rows");
}

#[test]
fn stdin_input_matches_inline_input() {
    let mut child = bin()
        .args(["invariant", "--which", "rank-gen", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"Bw\n").unwrap();
    let piped = child.wait_with_output().unwrap();
    let inline = run(&["invariant", "--which", "rank-gen", "Bw"]);
    assert_eq!(piped.status.code(), Some(0));
    assert_eq!(piped.stdout, inline.stdout);
}

#[test]
fn contraction_coproduct_of_k2_has_two_terms() {
    let out = run(&["coproduct", "--which", "contraction", "A_"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("A_ contraction: 2 terms"));
}

#[test]
fn bipartition_coproduct_of_one_vertex_has_two_terms() {
    let out = run(&["coproduct", "--which", "bipartition", "@"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("@ bipartition: 2 terms"));
}

#[test]
fn antipode_methods_agree_on_k3() {
    let recursive = run(&["antipode", "--method", "recursive", "Bw"]);
    let orientations = run(&["antipode", "--method", "orientations", "Bw"]);
    assert_eq!(recursive.status.code(), Some(0));
    assert_eq!(orientations.status.code(), Some(0));
    let lhs = stdout_of(&recursive);
    let rhs = stdout_of(&orientations);
    assert_eq!(
        lhs.split('\t').next_back(),
        rhs.split('\t').next_back(),
        "same signed sum from both methods"
    );
}

#[test]
fn orientation_counts_match_k3_goldens() {
    let out = run(&["orientations", "--format", "csv", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("Bw,total,8"));
    assert!(text.contains("Bw,acyclic,6"));
    assert!(text.contains("Bw,strong,2"));
    assert!(text.contains("Bw,partial-acyclic,13"));
    assert!(text.contains("Bw,stanley,6"));
}

#[test]
fn character_evaluates_and_rejects_unknown_names() {
    let ok = run(&["character", "--name", "mu(1)", "Bw"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_of(&ok), "Bw\tmu(1)\t8\n");
    let bad = run(&["character", "--name", "nope", "Bw"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr_of(&bad).contains("builtins:"));
}

#[test]
fn verify_passes_on_a_tiny_universe() {
    let out = run(&[
        "verify",
        "--suite",
        "all",
        "--max-vertices",
        "2",
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("suite all: PASS"));
}

#[test]
fn verify_rejects_bad_arguments() {
    let unknown = run(&["verify", "--suite", "bogus", "--max-vertices", "2"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr_of(&unknown).contains("suites:"));
    let too_big = run(&["verify", "--suite", "axioms", "--max-vertices", "9"]);
    assert_eq!(too_big.status.code(), Some(2));
}
