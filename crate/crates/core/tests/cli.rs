//! The `symcoh` binary: output, exit codes and reproducible reports.

use std::path::Path;
use std::process::{Command, Output};

fn symcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_run(dir: &Path, name: &str, extra: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let p = path.to_str().unwrap();
    let mut args = vec!["verify", "--axioms", "--section2", "--search", "--group", "S3", "--seed", "42", "--json", p];
    args.extend_from_slice(extra);
    let o = symcoh(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read(path).unwrap()
}

#[test]
fn cohomology_lines() {
    let o = symcoh(&["cohomology", "--group", "Z4", "--module", "Ztriv", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Z4 / Ztriv / n=2: H^2 = Z/4, HS^2 = Z/2, ker(i) = 0");
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = json_run(dir.path(), "a.json", &[]);
    let b = json_run(dir.path(), "b.json", &["--jobs", "4"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["engine"]["name"], "symcoh");
    assert_eq!(v["catalog_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn search_reports_findings() {
    let o = symcoh(&["search", "--group", "S3", "--module", "Z2triv", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FINDING: S3 / Z2triv / n=3: axiom-iv"), "{}", stdout(&o));
    let o = symcoh(&["search", "--group", "Z3", "--module", "Z5triv", "--degree", "2"]);
    assert!(stdout(&o).contains("no probe instances"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"groups\": 3}").unwrap();
    assert_eq!(symcoh(&["cohomology", "--catalog", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(symcoh(&["cohomology", "--group", "nope", "--module", "Ztriv"]).status.code(), Some(2));
    let o = symcoh(&["cohomology", "--group", "Z2", "--module", "Ztriv", "--degree", "3", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("error"));
}

#[test]
fn custom_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(
        &path,
        r#"{"groups": {"C2": {"table": [[0, 1], [1, 0]]}},
            "modules": {"Zminus": {"relations": [0], "action": {"C2": {"1": [[-1]]}}}},
            "jobs": [{"group": "C2", "module": "Zminus", "degrees": [1, 2], "tasks": ["cohomology"]}]}"#,
    )
    .unwrap();
    let o = symcoh(&["cohomology", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("C2 / Zminus / n=1: H^1 = Z/2"), "{out}");
    assert!(out.contains("C2 / Zminus / n=2: H^2 = 0"), "{out}");
}
