//! End-to-end tests of the `verify` binary: exit codes, diagnostics,
//! report formats, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn uneven_blocks_are_rejected_with_exit_two() {
    let out = run(&["--n", "3", "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("l must divide n (n = 3, l = 2)"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn unknown_check_ids_are_rejected_with_exit_two() {
    let out = run(&["--n", "2", "--l", "1", "--checks", "lem1,bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("unknown check `bogus`"), "stderr: {err}");
    assert!(err.contains("lem1"), "the diagnostic lists the known ids: {err}");
}

#[test]
fn zero_sizes_are_rejected_by_argument_parsing() {
    let out = run(&["--n", "0", "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subset_json_report_has_the_stable_shape() {
    let out = run(&["--n", "2", "--l", "2", "--checks", "lem1,lem2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(parsed["schema"], "1");
    assert_eq!(parsed["config"]["n"], 2);
    assert_eq!(parsed["config"]["l"], 2);
    let results = parsed["results"].as_array().expect("results array");
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["name"], "lem1");
    assert_eq!(results[1]["name"], "lem2");
    for row in results {
        assert_eq!(row["status"], "pass");
        assert_eq!(row["ms"], 0, "timings are normalized out of the stable format");
        assert!(row["witness"].is_null());
        assert_eq!(row["params"]["n"], 2);
    }
    assert_eq!(parsed["summary"]["pass"], 2);
    assert_eq!(parsed["summary"]["fail"], 0);
}

#[test]
fn text_report_lists_every_check_and_the_summary() {
    let out = run(&["--n", "2", "--l", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in ["lem1", "lem2", "lem3", "t2", "t3", "t4", "kl", "cor1", "rel"] {
        assert!(text.contains(id), "missing {id} in:\n{text}");
    }
    assert!(text.contains("9 checks: 9 passed, 0 failed"), "summary in:\n{text}");
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path: PathBuf = std::env::temp_dir().join(format!(
        "verify-cli-out-{}.json",
        std::process::id()
    ));
    let path_str = path.to_str().expect("temp path is utf8");
    let out = run(&[
        "--n", "2", "--l", "2", "--checks", "lem1", "--format", "json", "--out", path_str,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("wrote"));
    assert!(stdout(&out).contains("1 passed, 0 failed"));
    let written = std::fs::read_to_string(&path).expect("report file exists");
    let parsed: serde_json::Value = serde_json::from_str(&written).expect("valid json");
    assert_eq!(parsed["results"][0]["name"], "lem1");
    std::fs::remove_file(&path).ok();
}

#[test]
fn json_reports_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["--n", "2", "--l", "2", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let single = run(&["--n", "2", "--l", "2", "--format", "json", "--threads", "1"]);
    assert_eq!(first.stdout, single.stdout);
}

#[test]
fn bad_output_path_fails_with_exit_two() {
    let out = run(&[
        "--n", "2", "--l", "1", "--checks", "lem1", "--out",
        "/nonexistent-dir-for-verify-test/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot write"));
}
