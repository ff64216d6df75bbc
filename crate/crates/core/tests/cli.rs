//! The `sharpchar` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn sharpchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharpchar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_by_path() {
    let path = fixtures_dir().join("sg32_6.json");
    let o = sharpchar(&["check", "--table", path.to_str().unwrap(), "--combo", "chi1+2*chi2+chi5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("{-1, 3}") && out.contains("norm:             6"), "{out}");
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["--format", "json", "search", "--table", "d16", "--min", "0", "--max", "2", "--character"];
    let a = sharpchar(&args);
    let b = sharpchar(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> =
        stdout(&a).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect();
    assert!(lines.iter().any(|v| v["combination"] == "2*chi1+chi3" && v["norm"] == "5"));
    assert!(lines.iter().all(|v| v["is_sharp"] == true));
}

#[test]
fn counterexamples_report_the_family() {
    let o = sharpchar(&["counterexamples", "--table", "sg192_1494", "--min", "-1", "--max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L = {-2, 0, 2}"), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("partial"));
}

#[test]
fn fixtures_flag_redirects_lookup() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixtures_dir().join("d12.json"), dir.path().join("mine.json")).unwrap();
    let o = sharpchar(&["--fixtures", dir.path().to_str().unwrap(), "validate", "mine"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = sharpchar(&["--fixtures", dir.path().to_str().unwrap(), "validate", "sg32_6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(sharpchar(&["check", "--table", "d12", "--combo", "chi5"]).status.code(), Some(1));
    assert_eq!(sharpchar(&["check", "--table", "d12", "--combo", "chi9"]).status.code(), Some(2));
    assert_eq!(sharpchar(&["bogus"]).status.code(), Some(2));
    assert_eq!(sharpchar(&["predict", "--l", "{-1, 0, 2}"]).status.code(), Some(2));
    assert_eq!(sharpchar(&["examples"]).status.code(), Some(0));
    let o = sharpchar(&["lemmas", "--m-max", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn table_output_validates() {
    let o = sharpchar(&["--format", "json", "table", "quaternion", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q12.json");
    std::fs::write(&path, &o.stdout).unwrap();
    assert_eq!(sharpchar(&["validate", path.to_str().unwrap()]).status.code(), Some(0));
}
