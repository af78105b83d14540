//! The `paraframe` binary: exit codes, report determinism and model files.

use std::path::Path;
use std::process::{Command, Output};

use paraframe::catalog::{builtin, ModelSpec};

fn paraframe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paraframe")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn heisenberg_with(from: &str, to: &str) -> String {
    let text = builtin("para_heisenberg").unwrap().to_json();
    assert!(text.contains(from), "{from}");
    text.replacen(from, to, 1)
}

#[test]
fn check_example_group() {
    let out = paraframe(&["check", "paper_example"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["scal                         -6", "constant curvature c         -1", "(-2, 0)", "overall: pass"] {
        assert!(text.contains(line), "missing {line}");
    }
    assert!(text.contains("quasi_para_sasakian          true"));
}

#[test]
fn machine_report_is_reproducible() {
    let a = paraframe(&["check", "para_heisenberg", "--report", "machine"]);
    let b = paraframe(&["check", "para_heisenberg", "--report", "machine"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["summary"]["scal"], "2");
    assert_eq!(json["summary"]["h"], "3");
    assert_eq!(json["summary"]["constant_curvature"], serde_json::Value::Null);
    let rr = json["identities"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "ricci_semisymmetric")
        .unwrap();
    assert_eq!(rr["kind"], "property");
    assert_eq!(rr["status"], "does_not_hold");
    assert_eq!(rr["witness"]["residual"], "4");
}

#[test]
fn identity_selection() {
    let out = paraframe(&["check", "paper_example", "--report", "machine", "--identities", "bianchi_first,curvature_xi"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = json["identities"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["bianchi_first", "curvature_xi"]);
    assert!(json["implications"].as_array().unwrap().is_empty());

    let out = paraframe(&["check", "paper_example", "--identities", "no_such_identity"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no_such_identity"));
}

#[test]
fn unmet_expectation_fails_the_run() {
    let out = paraframe(&["check", "paper_example", "--expect", "quasi_para_sasakian,!para_sasakian"]);
    assert_eq!(out.status.code(), Some(0));
    let out = paraframe(&["check", "abelian_flat", "--expect", "quasi_para_sasakian"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn models_list_and_export() {
    let out = paraframe(&["models", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "paper_example\npara_heisenberg\nabelian_flat\n");

    let dir = tempfile::tempdir().unwrap();
    for name in ["paper_example", "para_heisenberg", "abelian_flat"] {
        let out = paraframe(&["models", "export", name]);
        assert_eq!(out.status.code(), Some(0));
        let path = write(dir.path(), &format!("{name}.json"), &stdout(&out));
        assert_eq!(ModelSpec::load(&path).unwrap(), builtin(name).unwrap());
        let checked = paraframe(&["check", &path, "--report", "machine"]);
        let direct = paraframe(&["check", name, "--report", "machine"]);
        assert_eq!(checked.stdout, direct.stdout);
    }

    let out = paraframe(&["models", "export", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bogus"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("truncated.json", "{\"name\": \"x\", \"dim\": 3,".to_string(), "line"),
        ("singular.json", heisenberg_with("[\"0\", \"0\", \"1\"]\n  ]", "[\"0\", \"0\", \"0\"]\n  ]"), "metric"),
        ("duplicate.json", heisenberg_with("[1, 2, 3, \"2\"]", "[1, 2, 3, \"2\"], [2, 1, 3, \"2\"]"), "duplicate"),
        ("range.json", heisenberg_with("[1, 2, 3, \"2\"]", "[1, 2, 4, \"2\"]"), "dimension"),
        ("unknown_key.json", heisenberg_with("\"dim\": 3,", "\"dim\": 3, \"colour\": 1,"), "colour"),
        ("bad_rational.json", heisenberg_with("\"2\"]", "\"2/0\"]"), "structure_constants[0][3]"),
        ("even.json", even_dimensional(), "odd"),
    ];
    for (file, text, needle) in cases {
        let path = write(dir.path(), file, &text);
        let out = paraframe(&["check", &path]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        assert!(stdout(&out).is_empty(), "{file}");
        assert!(stderr(&out).contains(needle), "{file}: {}", stderr(&out));
    }
    let out = paraframe(&["check", "/nonexistent/model.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = paraframe(&["check"]);
    assert_eq!(out.status.code(), Some(2));
}

fn even_dimensional() -> String {
    r#"{
  "name": "plane",
  "dim": 2,
  "structure_constants": [],
  "metric": [["1", "0"], ["0", "-1"]],
  "phi": [["0", "1"], ["1", "0"]],
  "xi": ["0", "0"],
  "eta": ["0", "0"]
}"#
    .to_string()
}
