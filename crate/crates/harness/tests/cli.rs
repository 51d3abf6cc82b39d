use std::process::Command;

use serde_json::Value;

fn ehf(dir: &std::path::Path, args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ehf")).args(args).current_dir(dir).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("ehf-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn exit_codes() {
    let d = scratch("codes");
    std::fs::write(d.join("c5.txt"), "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    std::fs::write(d.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    std::fs::write(d.join("bad.txt"), "3 2\n0 1\n1 x\n").unwrap();
    let (code, v) = ehf(&d, &["class", "c5.txt", "--t", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "class");
    assert_eq!(ehf(&d, &["class", "c4.txt"]).0, 1);
    assert_eq!(ehf(&d, &["class", "bad.txt"]).0, 2);
    assert_eq!(ehf(&d, &["banana", "c5.txt", "--a", "0", "--b", "1"]).0, 2);
    std::fs::remove_dir_all(&d).unwrap();
}

#[test]
fn solve_and_generate() {
    let d = scratch("solve");
    let (code, _) = ehf(&d, &["generate", "--family", "cycles", "--n", "7", "--out", "c7.txt"]);
    assert_eq!(code, 0);
    let (code, v) = ehf(&d, &["solve", "c7.txt", "--problem", "STABLE_SET"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 3);
    let (code, v) = ehf(&d, &["solve", "c7.txt", "--problem", "COLORING", "--method", "brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value"], 3);
    std::fs::remove_dir_all(&d).unwrap();
}
