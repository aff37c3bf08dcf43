use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_periplectic")).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_json_document() {
    let o = run(&["normalize", "--d", "2", "--json", "s1*y2"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["kind"], "affine");
    assert_eq!(doc["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn zero_prints_zero() {
    let o = run(&["normalize", "--d", "2", "e1*y1*y1*e1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn mul_reads_documents_from_stdin_and_inline() {
    let a = stdout(&run(&["normalize", "--d", "2", "--json", "y1"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_periplectic"))
        .args(["mul", "--json", "-", "s1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(a.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let direct = stdout(&run(&["normalize", "--d", "2", "--json", "y1*s1"]));
    assert_eq!(stdout(&o), direct);
}

#[test]
fn mul_needs_d_for_two_expressions() {
    let o = run(&["mul", "s1", "s1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["mul", "--d", "2", "--algebra", "brauer", "s1", "s1"]);
    assert!(o.status.success());
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--suite", "relations", "--n", "2", "--m", "1", "--d", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS") && !text.contains("FAIL") && !text.contains("\x1b["));
    let o = run(&["verify", "--suite", "relations", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = run(&["verify", "--suite", "daha", "--d", "3", "--json"]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["suite"], "daha");
    assert_eq!(r["passed"], true);
}

#[test]
fn render_both_formats() {
    let doc = stdout(&run(&["normalize", "--d", "2", "--json", "e1*y1"]));
    let o = run(&["render", "--format", "ascii", &doc]);
    assert!(o.status.success());
    assert!(stdout(&o).contains('∩'));
    let o = run(&["render", "--format", "svg", &doc]);
    assert!(stdout(&o).starts_with("<?xml"));
    let o = run(&["render", "--format", "svg", "--json", &doc]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["format"], "svg");
}

#[test]
fn render_rejects_bad_documents() {
    let o = run(&["render", r#"{"schema_version":"7","kind":"affine","d":1,"terms":[]}"#]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pbw_report() {
    let o = run(&["pbw", "--d", "2", "--max-degree", "1", "--json"]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["count"], 9);
    assert_eq!(r["rank"], 9);
}
