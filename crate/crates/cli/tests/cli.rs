use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn dpcascade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpcascade")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn roots_of_x_3_8() {
    let out = dpcascade(&["roots", "--k", "3", "--l", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "count=240 type=E8 index=1\n");
}

#[test]
fn hilbert_numerator_of_p112() {
    let out = dpcascade(&["hilbert", "--k", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("numerator: 1 7 7 1\n"));
}

#[test]
fn quasismooth_verdicts() {
    let out = dpcascade(&["quasismooth", "--weights", "1,1,3,3,5", "--degrees", "6,6"]);
    assert_eq!(stdout(&out), "quasismooth\n");
    let out = dpcascade(&["quasismooth", "--weights", "1,1,3,4", "--degree", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("NOT quasismooth; violating subset {2}"), "{text}");
}

#[test]
fn polygon_json_round_trips_through_files() {
    let out = dpcascade(&["--json", "catalog", "--family", "X:5:7"]);
    let record: Value = serde_json::from_slice(&out.stdout).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(&path, record["polygon"].to_string()).unwrap();
    let path = path.to_str().unwrap();

    let from_file = dpcascade(&["quiver", "--polygon", path, "--reduced"]);
    let from_id = dpcascade(&["quiver", "--family", "X:5:7", "--reduced"]);
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&from_id));

    // every listed neighbour is itself a valid polygon file
    let out = dpcascade(&["--json", "mutate", "--polygon", path, "--list"]);
    let list: Value = serde_json::from_slice(&out.stdout).unwrap();
    let first = &list["neighbors"][0];
    fs::write(dir.path().join("q.json"), first.to_string()).unwrap();
    let q = dir.path().join("q.json");
    let out = dpcascade(&["--json", "quiver", "--polygon", q.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn laurent_inversion_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let record: Value =
        serde_json::from_slice(&dpcascade(&["--json", "catalog", "--family", "X:5:7"]).stdout).unwrap();
    let scaffold = &record["scaffolds"][0];
    let p = dir.path().join("p.json");
    let s = dir.path().join("s.json");
    fs::write(&p, scaffold["polygon"].to_string()).unwrap();
    fs::write(&s, scaffold["scaffolding"].to_string()).unwrap();
    let out = dpcascade(&["laurent-invert", "--polygon", p.to_str().unwrap(), "--scaffolding", s.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), stdout(&dpcascade(&["laurent-invert", "--family", "X:5:7"])));
}

#[test]
fn exit_codes() {
    assert_eq!(dpcascade(&["roots", "--k", "3"]).status.code(), Some(2));
    assert_eq!(dpcascade(&["frobnicate"]).status.code(), Some(2));
    let out = dpcascade(&["roots", "--k", "3", "--l", "99"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error [rootsys]"));
    let out = dpcascade(&["catalog", "--family", "Y:1:2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_all_is_deterministic() {
    let a = dpcascade(&["check-all"]);
    let b = dpcascade(&["check-all"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.contains("] criterion ")).count(), 9);
    let failed = text.contains("[FAIL]");
    assert_eq!(a.status.code(), Some(if failed { 1 } else { 0 }));
}
