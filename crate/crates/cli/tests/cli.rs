use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zhegalkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zhegalkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs the command, checks the exit code and returns trimmed stdout.
fn ok(args: &[&str], code: i32) -> String {
    let out = zhegalkin(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: stderr={}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn fails(args: &[&str]) {
    let out = zhegalkin(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
}

#[test]
fn anf() {
    assert_eq!(ok(&["anf", "--n", "2", "x1 | x2"], 0), "x1 + x2 + x1*x2");
    assert_eq!(ok(&["anf", "2:8"], 0), "x1*x2");
    assert_eq!(ok(&["anf", "3:e8"], 0), "x1*x2 + x1*x3 + x2*x3");
    assert_eq!(ok(&["anf", "--n", "2", "!x1"], 0), "1 + x1");
    fails(&["anf", "--n", "2", "x1 & x9"]);
    fails(&["anf", "x1 | x2"]);
    fails(&["anf", "--n", "3", "2:8"]);
    fails(&["anf", "--n", "2", "x1 &"]);
}

#[test]
fn table() {
    assert_eq!(ok(&["table", "--n", "2", "x1*x2"], 0), "2:8");
    assert_eq!(ok(&["table", "--n", "2", "x1 ^ x2"], 0), "2:6");
    assert_eq!(ok(&["table", "--n", "1", "0"], 0), "1:0");
    fails(&["table", "--n", "2", "x3"]);
    fails(&["table", "--n", "2", "x1 +"]);
}

#[test]
fn derive() {
    assert_eq!(
        ok(&["derive", "--n", "3", "--var", "1", "x1*x2 + x3"], 0),
        "x2"
    );
    assert_eq!(ok(&["derive", "--n", "2", "--var", "2", "x1"], 0), "0");
    fails(&["derive", "--n", "2", "--var", "3", "x1"]);
    fails(&["derive", "--n", "2", "--var", "0", "x1"]);
}

#[test]
fn exterior_derivative() {
    assert_eq!(ok(&["d", "--n", "2", "x1*x2"], 0), "(x2)*d{1} + (x1)*d{2}");
    assert_eq!(ok(&["d", "--n", "2", "(x2)*d{1}"], 0), "(1)*d{1,2}");
    assert_eq!(ok(&["d", "--n", "2", "(1)*d{1,2}"], 0), "0");
    fails(&["d", "--n", "2", "(x2)*d{3}"]);
}

#[test]
fn wedge() {
    let ab = ok(&["wedge", "--n", "2", "(x2)*d{1}", "(x1)*d{2}"], 0);
    assert_eq!(ab, "(x1*x2)*d{1,2}");
    assert_eq!(ok(&["wedge", "--n", "2", "(x1)*d{2}", "(x2)*d{1}"], 0), ab);
    assert_eq!(ok(&["wedge", "--n", "2", "(1)*d{1}", "(1)*d{1}"], 0), "0");
    fails(&["wedge", "--n", "2", "(1)*d{1}"]);
}

#[test]
fn integrate() {
    assert_eq!(
        ok(&["integrate", "--n", "2", "--top", "(1)*d{1,2}"], 0),
        "1"
    );
    assert_eq!(
        ok(&["integrate", "--n", "2", "--face", "2,1", "(x2)*d{1}"], 0),
        "1"
    );
    assert_eq!(
        ok(&["integrate", "--n", "2", "--face", "2,0", "(x2)*d{1}"], 0),
        "0"
    );
    assert_eq!(
        ok(&["integrate", "--n", "2", "--boundary", "(x2)*d{1}"], 0),
        "1"
    );
    fails(&["integrate", "--n", "2", "--top", "(x2)*d{1}"]);
    fails(&["integrate", "--n", "2", "--boundary", "(1)*d{1,2}"]);
    fails(&["integrate", "--n", "2", "--face", "2,2", "(x2)*d{1}"]);
    fails(&["integrate", "--n", "2", "--top", "--boundary", "(1)*d{1,2}"]);
    fails(&["integrate", "--n", "2", "(1)*d{1,2}"]);
}

#[test]
fn stokes() {
    let line = ok(&["stokes", "--n", "2", "(x2)*d{1}"], 0);
    assert!(line.starts_with("lhs=1 rhs=1 pass=true"), "{line}");
    assert_eq!(
        ok(&["stokes", "--n", "2", "--exhaustive"], 0),
        "checked=256 failed=0"
    );
    assert_eq!(
        ok(&["stokes", "--n", "1", "--exhaustive"], 0),
        "checked=4 failed=0"
    );
    assert_eq!(
        ok(
            &["stokes", "--n", "4", "--random", "10000", "--seed", "1"],
            0
        ),
        "checked=10000 failed=0"
    );
    fails(&["stokes", "--n", "3", "--exhaustive"]);
    fails(&["stokes", "--n", "2"]);
    fails(&["stokes", "--n", "2", "--exhaustive", "--random", "5"]);
    fails(&["stokes", "--n", "2", "--exhaustive", "(x2)*d{1}"]);
    fails(&["stokes", "--n", "2", "(1)*d{1,2}"]);
}

#[test]
fn bench() {
    let line = ok(&["bench", "--n", "10", "--reps", "3"], 0);
    assert!(line.contains("verified=true"), "{line}");
    assert!(line.contains("median="), "{line}");
    fails(&["bench", "--n", "8"]);
    fails(&["bench", "--n", "25"]);
}

#[test]
fn reads_standard_input_for_dash() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zhegalkin"))
        .args(["d", "--n", "2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"(x2)*d{1}\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(1)*d{1,2}\n");
}

#[test]
fn outputs_parse_back() {
    let anf = ok(&["anf", "--n", "3", "(x1 | x2) & !x3"], 0);
    let table = ok(&["table", "--n", "3", &anf], 0);
    assert_eq!(ok(&["anf", &table], 0), anf);

    let d = ok(&["d", "--n", "3", "(x1*x2)*d{3} + (x3)*d{1}"], 0);
    assert_eq!(ok(&["wedge", "--n", "3", &d, "1"], 0), d);
    assert_eq!(ok(&["d", "--n", "3", &d], 0), "0");
}

#[test]
fn sweeps_are_deterministic() {
    let args = ["stokes", "--n", "5", "--random", "2000", "--seed", "9"];
    assert_eq!(ok(&args, 0), ok(&args, 0));
}
