use std::process::{Command, Output};

use serde_json::Value;

fn superstein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superstein")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--emit", "json"];
    full.extend_from_slice(args);
    let out = superstein(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn result(report: &Value, name: &str) -> Value {
    report["results"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap_or_else(|| panic!("no result {name}"))["value"].clone()
}

fn verdict(report: &Value, name: &str) -> String {
    let v = report["verdicts"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap_or_else(|| panic!("no verdict {name}"));
    v["verdict"].as_str().unwrap().to_string()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(format!("{}/schema/report.schema.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn kernel_of_grassmann_steinberg() {
    let (r, code) = json(&["kernel", "--algebra", "builtin:grassmann1", "--shape", "2|1"]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "kernel_dim"), 1);
    assert_eq!(verdict(&r, "hc1_match"), "pass");
    assert_eq!(verdict(&r, "central"), "pass");
}

#[test]
fn homology_of_st22() {
    let (r, code) = json(&["homology", "--target", "st", "--algebra", "builtin:field", "--shape", "2|2"]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "h2"), 2);
    assert_eq!(result(&r, "expected_h2")["value"], 2);
    assert_eq!(verdict(&r, "h2 expectation"), "pass");
}

#[test]
fn hc_of_field() {
    let (r, code) = json(&["hc", "--algebra", "builtin:field", "--degree", "1"]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "dim"), 0);
    assert_eq!(verdict(&r, "HC_1 routes agree"), "pass");
}

#[test]
fn shape_accepts_x_syntax() {
    let (r, code) = json(&["st", "--algebra", "builtin:field", "--shape", "2x2"]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "dim"), 15);
}

#[test]
fn files_and_exit_codes() {
    let (r, code) = json(&["validate", &data("grassmann1.alg")]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "odd_dim"), 1);
    let (r, code) = json(&["validate", &data("nonassoc.alg")]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&r, "axioms"), "fail");
    assert_eq!(superstein(&["validate", &data("char2.alg")]).status.code(), Some(2));
    let out = superstein(&["validate", &data("typo.alg")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(superstein(&["validate", &data("missing.alg")]).status.code(), Some(2));
    assert_eq!(superstein(&["st", "--algebra", "builtin:octonions", "--shape", "2|1"]).status.code(), Some(2));
    let (r, code) = json(&["pairing", "--algebra", &data("dual_f5.alg")]);
    assert_eq!(code, 0);
    assert_eq!(r["inputs"][1]["value"], "Fp:5");
}

#[test]
fn text_and_json_agree() {
    let args = ["st", "--algebra", "builtin:grassmann1", "--shape", "2|1", "--verify"];
    let (r, _) = json(&args);
    let text = String::from_utf8(superstein(&args).stdout).unwrap();
    for e in r["results"].as_array().unwrap() {
        let value = match &e["value"] {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        assert!(text.contains(&format!("{}: {}\n", e["name"].as_str().unwrap(), value)), "{e}");
    }
    for v in r["verdicts"].as_array().unwrap() {
        assert!(text.contains(&format!("[{}] {}", v["verdict"].as_str().unwrap(), v["name"].as_str().unwrap())));
    }
}

#[test]
fn reports_match_schema() {
    let validator = schema();
    for args in [
        vec!["cocycle22", "--algebra", "builtin:grassmann1"],
        vec!["sl", "--algebra", "builtin:dual", "--shape", "3|1"],
        vec!["homology", "--target", "stsharp", "--algebra", "builtin:field"],
        vec!["homology", "--target", "st", "--algebra", "builtin:field", "--shape", "2|2", "--max-wedge", "10"],
        vec!["validate", "builtin:mat1_1"],
    ] {
        let (r, code) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        let errors: Vec<String> = validator.iter_errors(&r).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_superstein"))
        .env("SUPERSTEIN_THREADS", "1")
        .args(["st", "--algebra", "builtin:field", "--shape", "2|1", "--verify"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_superstein")).env("SUPERSTEIN_THREADS", "zero").arg("corpus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
