use std::path::Path;
use std::process::{Command, Output};

const PATH3: &str = "p bc 3 2 directed\ne 0 1 1\ne 1 2 1\n";
const D2: &str = "p bc 4 4 directed\ne 0 1 1\ne 0 2 1\ne 1 3 1\ne 2 3 1\n";
const G1: &str = "c G1\np bc 4 5 directed\ne 0 1 1\ne 1 3 5\ne 0 2 2\ne 2 3 2\ne 0 3 4\n";

fn incbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_incbc")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn static_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "path.txt", PATH3);
    let out = incbc(&["static", &path]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("bc 1 1.000000000000\n"));

    let g1 = write(dir.path(), "g1.txt", G1);
    let a = incbc(&["static", &g1, "--algo", "brandes"]);
    let b = incbc(&["static", &g1, "--algo", "dagged"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("stat mstar 5\n"));

    let bad = write(dir.path(), "bad.txt", "p bc 2 1 directed\ne 0 1 0\n");
    let out = incbc(&["static", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn stream_runs() {
    let dir = tempfile::tempdir().unwrap();
    let d2 = write(dir.path(), "d2.txt", D2);
    let upd = write(dir.path(), "upd.txt", "u e 0 1 0.5\n");
    let out = incbc(&["stream", &d2, &upd, "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verify 0 pass\n"));
    assert!(text.contains("stat edges_examined "));

    let full = incbc(&["stream", &d2, &upd, "--mode", "full", "--verify", "--digest"]);
    assert!(full.status.success());
    assert_eq!(stdout(&full).lines().filter(|l| l.starts_with("stat digest ")).count(), 2);

    let vertex = write(dir.path(), "vertex.txt", "u v 3 1\ni 1 0.5\n");
    let out = incbc(&["stream", &d2, &vertex]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mode"));

    let empty = write(dir.path(), "empty.txt", "");
    let out = incbc(&["stream", &d2, &empty]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("bc ")).count(), 4);
    assert!(stdout(&out).ends_with("stat events 0\n"));
}

#[test]
fn gen_is_deterministic() {
    let a = incbc(&["gen", "--model", "complete", "--n", "4", "--seed", "9"]);
    let b = incbc(&["gen", "--model", "complete", "--n", "4", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("p bc 4 12 directed\n"));
    assert_eq!(text.lines().count(), 13);

    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", &text);
    let out = incbc(&["stats", &g]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("stat mstar_per_nlogn "));

    assert!(!incbc(&["gen", "--model", "gnp", "--n", "5", "--p", "0"]).status.success());
}
