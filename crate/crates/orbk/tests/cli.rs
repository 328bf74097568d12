//! End-to-end runs of the `orbk` binary: exit codes, output round trips,
//! and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use orbk::format::{parse_tableau, ReportDoc};

fn orbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbk"))
        .args(args)
        .env_remove("ORBK_BOUND")
        .output()
        .expect("binary runs")
}

fn orbk_with(args: &[&str], envs: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbk"));
    cmd.args(args).env_remove("ORBK_BOUND");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .expect("piped")
            .write_all(text.as_bytes())
            .expect("stdin written");
    }
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn tableau_json_round_trips() {
    let out = orbk(&[
        "tableau",
        "--n",
        "10",
        "--subset",
        "1,4,5,6,9",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed = parse_tableau(stdout(&out).trim()).unwrap();
    assert_eq!(
        parsed.rows(),
        &[vec![1, 3, 4, 8, 9], vec![2, 5, 10], vec![6], vec![7]]
    );
}

#[test]
fn word_json() {
    let out = orbk(&[
        "word",
        "--n",
        "10",
        "--subset",
        "1,4,5,6,9",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let entries: Vec<u32> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(entries, vec![2, 1, 3, 7, 6, 5, 4, 8, 10, 9]);
}

#[test]
fn descendants_are_deterministic() {
    let first = orbk(&[
        "descendants",
        "--n",
        "10",
        "--subset",
        "1,3,4,5,7,8",
        "--format",
        "json",
    ]);
    let second = orbk(&[
        "descendants",
        "--n",
        "10",
        "--subset",
        "1,3,4,5,7,8",
        "--format",
        "json",
    ]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    let doc: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    assert_eq!(doc["descendants"].as_array().unwrap().len(), 3);
    // every embedded tableau re-parses
    for entry in doc["descendants"].as_array().unwrap() {
        let rows = serde_json::json!({ "rows": entry["rows"] });
        parse_tableau(&rows.to_string()).unwrap();
    }
}

#[test]
fn usage_errors_exit_2() {
    let out = orbk(&["descendants", "--n", "4", "--subset", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = orbk(&["descendants", "--n", "4", "--subset", "zebra"]);
    assert_eq!(out.status.code(), Some(2));
    let out = orbk(&["tableau", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = orbk(&["verify", "--suite", "nonsense", "--bound", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = orbk(&["project", "--lo", "3", "--hi", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_exceeded_exits_3() {
    let out = orbk(&["closure", "--n", "9", "--subset", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = orbk(&["hasse", "--n", "9", "--subset", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_var_raises_the_bound() {
    let denied = orbk(&["closure", "--n", "7", "--subset", "1,2,3,4,5,6"]);
    assert_eq!(denied.status.code(), Some(3));
    let allowed = orbk_with(
        &["closure", "--n", "7", "--subset", "1,2,3,4,5,6"],
        &[("ORBK_BOUND", "7")],
        None,
    );
    assert!(allowed.status.success());
    assert!(stdout(&allowed).contains("1 members"));
    let garbage = orbk_with(
        &["closure", "--n", "7", "--subset", ""],
        &[("ORBK_BOUND", "many")],
        None,
    );
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn closure_counts() {
    let out = orbk(&["closure", "--n", "4", "--subset", "1", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["members"].as_array().unwrap().len(), 5);
}

#[test]
fn project_reads_stdin() {
    let out = orbk_with(
        &["project", "--lo", "1", "--hi", "3", "--format", "json"],
        &[],
        Some(r#"{"rows":[[1,4],[2],[3]]}"#),
    );
    assert!(out.status.success());
    let t = parse_tableau(stdout(&out).trim()).unwrap();
    assert_eq!(t.rows(), &[vec![1], vec![2], vec![3]]);
}

#[test]
fn psi_subset_and_tableau() {
    let out = orbk(&[
        "psi",
        "--n",
        "10",
        "--subset",
        "1,3,4,5,7,8",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["I"], serde_json::json!([2, 3, 5, 6, 7, 9]));

    let out = orbk_with(
        &["psi", "--n", "4", "--format", "json"],
        &[],
        Some(r#"{"rows":[[1,3,4],[2]]}"#),
    );
    assert!(out.status.success());
    let t = parse_tableau(stdout(&out).trim()).unwrap();
    assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4]]);

    let both = orbk(&["psi", "--n", "4", "--subset", "1", "--input", "-"]);
    assert_eq!(both.status.code(), Some(2));

    let gappy = orbk_with(
        &["psi", "--n", "2", "--format", "json"],
        &[],
        Some(r#"{"rows":[[2,5]]}"#),
    );
    assert_eq!(gappy.status.code(), Some(2));
}

#[test]
fn verify_single_suite() {
    let out = orbk(&[
        "verify", "--suite", "ss", "--bound", "4", "--format", "json",
    ]);
    assert!(out.status.success());
    let docs: Vec<ReportDoc> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(docs.len(), 3); // n = 2, 3, 4
    assert!(docs.iter().all(|d| d.violation_count == 0));
    assert!(docs.iter().all(|d| d.check == "ss"));
}

#[test]
fn verify_all_small_bound() {
    let out = orbk(&["verify", "--bound", "4", "--jobs", "2"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("verify:"));
    assert!(text.contains("0 violations"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn descendants_of_the_full_subset_are_empty() {
    let out = orbk(&[
        "descendants",
        "--n",
        "5",
        "--subset",
        "1,2,3,4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["descendants"].as_array().unwrap().len(), 0);
}

#[test]
fn hasse_of_the_empty_subset_rank3() {
    let out = orbk(&["hasse", "--n", "3", "--subset", "", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 4);
}

#[test]
fn hasse_dot_output() {
    let out = orbk(&["hasse", "--n", "4", "--subset", "1"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph closure {"));
    assert_eq!(dot.matches("label=").count(), 5);
    assert_eq!(dot.matches("fillcolor=lightgrey").count(), 2);
    assert_eq!(dot.matches("penwidth=2").count(), 1);
    assert_eq!(dot.matches(" -> ").count(), 5);

    let json = orbk(&["hasse", "--n", "4", "--subset", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 5);
}
