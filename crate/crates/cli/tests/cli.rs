use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sjplane"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn doc(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const U23: &str = "dim 2 / X1: 0 1 ; 0 0 / X2: 2 3 ; 0 2\n";

#[test]
fn classify_u23() {
    let f = doc(U23);
    let o = run(&["classify", path(&f)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "classify: Dim2U(2,3)\nindecomposable\n");
}

#[test]
fn classify_one_dim() {
    let f = doc("dim 1 / X1: 0 / X2: 5");
    let o = run(&["classify", path(&f)]);
    assert_eq!(stdout(&o), "classify: JordanChain(5,1)\nindecomposable\n");
}

#[test]
fn nf_of_x2_x1() {
    let o = run(&["nf", "x2 x1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "nf: +1·x21 − 1·x1·x2\n");
}

#[test]
fn construct_output_feeds_back_in() {
    let o = run(&["construct", "T3W(1,1,2,-1,0)"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let f = doc(&body);
    let back = run(&["classify", path(&f)]);
    assert!(back.status.success(), "{}", stderr(&back));
    assert!(stdout(&back).starts_with("classify: T3U(2,"), "{}", stdout(&back));
}

#[test]
fn decompose_two_blocks() {
    let f = doc("dim 4\nX1: 0 1 0 0 ; 0 0 0 0 ; 0 0 0 1 ; 0 0 0 0\nX2: 1 0 0 0 ; 0 1 0 0 ; 0 0 2 0 ; 0 0 0 2\n");
    let o = run(&["--json", "decompose", path(&f)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s = v["payload"]["summands"].as_array().unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s[0]["dim"], 2);
    assert_eq!(s[0]["t_eigenvalue"], "1");
    assert_eq!(s[1]["t_eigenvalue"], "4");
}

#[test]
fn iso_of_conjugates() {
    let a = doc(U23);
    // P = [[1,1],[0,1]] applied to U(2,3) leaves it unchanged up to basis
    let b = doc("dim 2\nX1: 0 1 ; 0 0\nX2: 2 3 ; 0 2\n");
    let c = doc("dim 2\nX1: 0 1 ; 0 0\nX2: 2 1 ; 0 2\n");
    let o = run(&["iso", path(&a), path(&b)]);
    assert_eq!(stdout(&o), "iso: isomorphic\n");
    let o = run(&["iso", path(&a), path(&c)]);
    assert_eq!(stdout(&o), "iso: not isomorphic\n");
    assert!(o.status.success());
}

#[test]
fn check_valid_and_invalid() {
    let f = doc(U23);
    let o = run(&["check", path(&f)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("check: valid\n"));
    let bad = doc("dim 2 / X1: 0 1 ; 0 0 / X2: 1 0 ; 1 1");
    let o = run(&["check", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("check: relation violated\n"));
}

#[test]
fn errors_exit_nonzero_with_their_name() {
    let f = doc("X2: 1 2\n");
    let o = run(&["classify", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: parse error: "), "{}", stderr(&o));

    let f = doc("dim 2\nX1: 0 1 ; 0 0\nX2: 1 2 ; 0 1/0\n");
    let o = run(&["classify", path(&f)]);
    assert!(stderr(&o).contains(":3:"), "{}", stderr(&o));

    let bad = doc("dim 2 / X1: 0 1 ; 0 0 / X2: 1 0 ; 1 1");
    let o = run(&["classify", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: relation violated: "), "{}", stderr(&o));

    let o = run(&["construct", "FamU(1,4)"]);
    assert!(o.status.success());
    let body: String = stdout(&o).lines().skip(1).map(|l| format!("{l}\n")).collect();
    let f = doc(&body);
    let o = run(&["classify", path(&f)]);
    assert!(stderr(&o).starts_with("error: dimension unsupported: "), "{}", stderr(&o));

    let o = run(&["construct", "T2T(1,0,0)"]);
    assert!(stderr(&o).starts_with("error: constraint violation: "), "{}", stderr(&o));

    let o = run(&["classify", "/nonexistent/module.txt"]);
    assert!(stderr(&o).starts_with("error: io error: "), "{}", stderr(&o));
}

#[test]
fn nonsplit_spectrum_is_reported() {
    // X2 with characteristic polynomial x^2 - 2
    let f = doc("dim 2 / X1: 0 0 ; 0 0 / X2: 0 2 ; 1 0");
    let o = run(&["classify", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: nonsplit spectrum of X2"), "{}", stderr(&o));
}

#[test]
fn json_error_object() {
    let o = run(&["--json", "nf", "x1 x3"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "parse error");
}

#[test]
fn stdin_input() {
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(U23.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "classify: Dim2U(2,3)\nindecomposable\n");
}

#[test]
fn json_keys_are_stable_and_output_deterministic() {
    let f = doc(U23);
    let a = run(&["--json", "classify", path(&f)]);
    let b = run(&["--json", "classify", path(&f)]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let order: Vec<usize> = ["\"command\"", "\"ok\"", "\"payload\"", "\"verdict\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn selftest_default_bounds() {
    let o = run(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("selftest: all checks passed\n"));
    assert!(!text.contains("FAILED"));
    let o = run(&["--json", "selftest", "--bmax", "3", "--cmax", "2", "--nmax", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["payload"]["bounds"]["nmax"], 4);
    assert_eq!(v["ok"], true);
}
