use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn balgraph(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balgraph"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn lines(out: &[u8]) -> Vec<Value> {
    String::from_utf8_lossy(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn check_reports_r10() {
    let dir = tempfile::tempdir().unwrap();
    let out = balgraph(dir.path(), &["--deterministic", "check", "@R10"]);
    assert_eq!(out.status.code(), Some(0));
    let l = lines(&out.stdout);
    assert_eq!(l.len(), 3);
    assert_eq!(l[0]["command"], "check");
    let g = &l[1];
    assert_eq!((g["n"].as_u64(), g["m"].as_u64()), (Some(10), Some(15)));
    assert_eq!(g["balanced"], false);
    assert_eq!(g["balanceable"], json!({"signing": true, "structural": true, "agree": true}));
    assert_eq!(g["cubic"], true);
    assert_eq!(g["girth"], 4);
    assert!(l[2]["summary"].get("timestamp").is_none());
}

#[test]
fn timestamp_present_without_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = balgraph(dir.path(), &["check", "@K33"]);
    let l = lines(&out.stdout);
    assert!(l.last().unwrap()["summary"]["timestamp"]["unix"].is_u64());
}

#[test]
fn csv_matrix_input() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.csv", "1,1,0\n0,1,1\n1,0,1\n");
    let out = balgraph(dir.path(), &["check", "m.csv"]);
    assert_eq!(out.status.code(), Some(0));
    let g = &lines(&out.stdout)[1];
    assert_eq!(g["n"], 6);
    assert_eq!(g["balanced"], false);
    assert_eq!(g["matrix_balanced"], false);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "tri.txt", "a b\nb c\nc a\n");
    write(dir.path(), "empty.txt", "# nothing\n");
    let code = |args: &[&str]| balgraph(dir.path(), args).status.code();
    assert_eq!(code(&["check", "tri.txt"]), Some(2));
    assert_eq!(code(&["check", "empty.txt"]), Some(2));
    assert_eq!(code(&["check", "missing.txt"]), Some(2));
    assert_eq!(code(&["verify"]), Some(2));
    assert_eq!(code(&["--guard-n", "4", "check", "@R10"]), Some(3));
    assert_eq!(code(&["decompose", "@Q3"]), Some(4));
    assert_eq!(code(&["decompose", "@R10"]), Some(0));
}

#[test]
fn resource_limit_is_an_error_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = balgraph(dir.path(), &["--deterministic", "--guard-n", "4", "check", "@R10"]);
    let l = lines(&out.stdout);
    assert_eq!(l[1]["error"]["kind"], "resource-limit");
    assert_eq!(l[2]["summary"], json!({"graphs": 1, "checked": 0, "errors": 1}));
}

#[test]
fn witnesses_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = balgraph(dir.path(), &["--dot", "k.dot", "witness", "@K33", "twins"]);
    assert_eq!(out.status.code(), Some(0));
    let w = &lines(&out.stdout)[1]["witness"];
    assert_eq!(w.as_array().map(Vec::len), Some(2));
    let dot = std::fs::read_to_string(dir.path().join("k.dot")).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("fillcolor=orange"));

    let out = balgraph(dir.path(), &["witness", "@C8", "odd-wheel"]);
    assert_eq!(lines(&out.stdout)[1]["witness"], "none");
}

#[test]
fn generate_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = balgraph(
        dir.path(),
        &["--out", "g.txt", "--seed", "9", "generate", "--random", "--count", "5", "--filter", "balanceable"],
    );
    assert_eq!(out.status.code(), Some(0));
    let out = balgraph(dir.path(), &["--deterministic", "check", "g.txt"]);
    let l = lines(&out.stdout);
    assert_eq!(l.last().unwrap()["summary"]["checked"], 5);
    assert!(l[1..6].iter().all(|g| g["balanceable"]["agree"] == true && g["balanceable"]["signing"] == true));
}

#[test]
fn verify_is_reproducible_with_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--deterministic", "--seed", "4", "verify", "--theorem", "deg2-square", "--random", "--count", "40",
        "--forbid-4hole",
    ];
    let a = balgraph(dir.path(), &args);
    let b = balgraph(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let l = lines(&a.stdout);
    let counts = &l.last().unwrap()["summary"]["counts"]["deg2-square"];
    assert_eq!(counts["fails"], 0);
    assert_eq!(l[0]["seed"], 4);
}

#[test]
fn decompose_state_resumes_and_is_removed() {
    let dir = tempfile::tempdir().unwrap();
    let full = balgraph(dir.path(), &["--deterministic", "decompose", "@TT", "--recursive", "--state", "s.json"]);
    assert_eq!(full.status.code(), Some(0));
    assert!(!dir.path().join("s.json").exists());
    let nodes: Vec<Value> = lines(&full.stdout).into_iter().filter(|l| l.get("node").is_some()).collect();
    assert!(nodes.len() >= 3);
    assert_eq!(nodes[0]["verdict"]["tag"], "StarCutset");

    // interrupted after the root: its children are still queued
    let pending: Vec<Value> = nodes
        .iter()
        .filter(|n| n["parent"] == 0)
        .map(|n| json!({"node": n["node"], "parent": 0, "depth": 1, "graph": n["graph"]}))
        .collect();
    let state = json!({
        "input": "@TT", "recursive": true, "max_depth": 16,
        "next_id": pending.len() + 1, "exit": 0, "pending": pending,
    });
    write(dir.path(), "s.json", &state.to_string());
    let resumed = balgraph(dir.path(), &["--deterministic", "decompose", "--state", "s.json"]);
    assert_eq!(resumed.status.code(), Some(0));
    let l = lines(&resumed.stdout);
    assert_eq!(l[0]["input"]["resumed"], true);
    let again: Vec<Value> = l.into_iter().filter(|l| l.get("node").is_some()).collect();
    assert_eq!(again, nodes[1..]);
    assert!(!dir.path().join("s.json").exists());
}
