use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankcode"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rankcode-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_spec(dir: &Path, args: &[&str]) -> String {
    let out = run(&[&["code", "new"][..], args].concat(), "");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join("spec.json");
    std::fs::write(&path, out.stdout).unwrap();
    path.to_str().unwrap().to_owned()
}

const TWISTED: &[&str] = &["--q", "3", "--n", "4", "--k", "2", "--r", "3", "--eta", "random-valid", "--seed", "7"];

#[test]
fn code_new_is_deterministic() {
    let a = run(&[&["code", "new"][..], TWISTED].concat(), "");
    let b = run(&[&["code", "new"][..], TWISTED].concat(), "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["q"], 3);
    assert_eq!(json["r"], 3);
    assert_ne!(json["eta"], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn zero_twist_gives_a_classical_spec() {
    let out = run(&["code", "new", "--q", "3", "--n", "4", "--k", "2", "--r", "0", "--eta", "zero"], "");
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["eta"], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn binary_field_has_no_valid_twist() {
    let out = run(&["code", "new", "--q", "2", "--n", "4", "--k", "2", "--eta", "random-valid"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("F_2"));
}

#[test]
fn encode_corrupt_decode_round_trip() {
    let dir = scratch("pipe");
    let spec = write_spec(&dir, TWISTED);
    let msg = "[[1,2,0,1],[0,0,1,2]]";
    let word = run(&["encode", "--spec", &spec], msg);
    assert_eq!(word.status.code(), Some(0));
    for (rank, seed) in [("0", "0"), ("1", "42"), ("1", "11")] {
        let noisy = run(&["corrupt", "--spec", &spec, "--rank", rank, "--seed", seed], &stdout(&word));
        assert_eq!(noisy.status.code(), Some(0));
        let decoded = run(&["decode", "--spec", &spec], &stdout(&noisy));
        assert_eq!(decoded.status.code(), Some(0));
        assert_eq!(stdout(&decoded).trim(), msg);
    }
    let noisy = run(&["corrupt", "--spec", &spec, "--rank", "1", "--seed", "11"], &stdout(&word));
    assert_ne!(noisy.stdout, word.stdout);
    let oracle = run(&["oracle-decode", "--spec", &spec], &stdout(&noisy));
    assert_eq!(stdout(&oracle).trim(), msg);
    assert!(String::from_utf8_lossy(&oracle.stderr).contains("distance 1 (unique)"));
}

#[test]
fn packed_round_trip() {
    let dir = scratch("hex");
    let spec = write_spec(&dir, TWISTED);
    let word = run(&["encode", "--spec", &spec, "--hex"], "1201:0012");
    let noisy = run(&["corrupt", "--spec", &spec, "-t", "1", "--seed", "5", "--hex"], &stdout(&word));
    let decoded = run(&["decode", "--spec", &spec, "--hex"], &stdout(&noisy));
    assert_eq!(stdout(&decoded).trim(), "1201:0012");
}

#[test]
fn corrupt_is_seeded() {
    let dir = scratch("seeded");
    let spec = write_spec(&dir, TWISTED);
    let word = "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]";
    let a = run(&["corrupt", "--spec", &spec, "-t", "2", "--seed", "3"], word);
    let b = run(&["corrupt", "--spec", &spec, "-t", "2", "--seed", "3"], word);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn decode_failure_exits_two() {
    let dir = scratch("fail");
    let spec = write_spec(&dir, &["--q", "2", "--n", "4", "--k", "2", "--eta", "zero"]);
    let mut failures = 0;
    for seed in 0..40 {
        let seed = seed.to_string();
        let noisy = run(&["corrupt", "--spec", &spec, "-t", "4", "--seed", &seed], "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]");
        let out = run(&["decode", "--spec", &spec], &stdout(&noisy));
        match out.status.code() {
            Some(2) => failures += 1,
            Some(0) => {}
            other => panic!("unexpected exit {other:?}"),
        }
    }
    assert!(failures > 0);
}

#[test]
fn parse_errors_exit_one() {
    let dir = scratch("parse");
    let spec = write_spec(&dir, TWISTED);
    let out = run(&["decode", "--spec", &spec], "[[1,0,0,0],\n[1,0");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
}

#[test]
fn verify_mrd_and_budget() {
    let dir = scratch("mrd");
    let spec = write_spec(&dir, TWISTED);
    let out = run(&["verify-mrd", "--spec", &spec], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("MRD confirmed"));
    let out = run(&["verify-mrd", "--spec", &spec, "--max-codewords", "10"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_mrd_flags_a_forbidden_twist() {
    let dir = scratch("broken");
    let path = dir.join("broken.json");
    std::fs::write(&path, r#"{"q":3,"n":4,"k":2,"modulus":[2,1,0,0,1],"eta":[1,0,0,0],"r":3}"#).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(run(&["verify-mrd", "--spec", path], "").status.code(), Some(1));
    let out = run(&["verify-mrd", "--spec", path, "--unvalidated"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not MRD"));
}

#[test]
fn selftest_bench_and_version() {
    let out = run(&["selftest"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
    let dir = scratch("bench");
    let spec = write_spec(&dir, TWISTED);
    let out = run(&["bench", "--spec", &spec, "--trials", "3", "--sizes", "4,5"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 2);
    let out = run(&["--version"], "");
    assert!(stdout(&out).contains("ChaCha8Rng"));
}
