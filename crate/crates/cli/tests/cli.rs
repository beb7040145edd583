use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn planebir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planebir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = planebir(&full);
    let v = serde_json::from_slice(&out.stdout).expect("json output");
    (v, out.status.code().unwrap())
}

fn wordfile(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn classify_literal_gamma() {
    let (v, code) = json(&["classify", "x^2*y ; x*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["class"], "Saa");
    assert_eq!(strings(&v["core_word"]), ["g 2 1 1 1"]);
    assert_eq!(v["verified"], true);
}

#[test]
fn config_check_concurrent_triple() {
    let (v, code) = json(&["config-check", "x; y; x-y"]);
    assert_eq!(code, 0);
    assert_eq!(v["admissible"], false);
    assert_eq!(v["corollary_type"], "c");
    assert_eq!(v["concurrency_point"], serde_json::json!(["0", "0"]));
}

#[test]
fn word_invariants_of_alpha1_word() {
    let f = wordfile("sacstd 1\nv x^2 - 3*x + 2\n");
    let (v, code) = json(&["word-invariants", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 3);
    let mut miss = strings(&v["miss"]);
    miss.sort();
    assert_eq!(miss, ["x - 2*y", "x - y", "y"]);
}

#[test]
fn compose_then_peel_round_trip() {
    let f = wordfile("h 2 1 + y\ng 1 1 1 2\naff 1 1 0 1 2 -1\nv x^2 - 1\n");
    let out = planebir(&["compose", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let map = String::from_utf8(out.stdout).unwrap().trim().to_string();
    let (v, code) = json(&["peel", &map]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 6);
    let peeled = wordfile(&(strings(&v["word"]).join("\n") + "\n"));
    let back = planebir(&["compose", peeled.path().to_str().unwrap()]);
    assert_eq!(String::from_utf8(back.stdout).unwrap().trim(), map);
}

#[test]
fn config_example_realizes_configuration() {
    let out = planebir(&["config-example", "--type", "a", "--params", "0,1,-2"]);
    assert!(out.status.success());
    let f = wordfile(&String::from_utf8(out.stdout).unwrap());
    let (inv, _) = json(&["word-invariants", f.path().to_str().unwrap()]);
    let lines = strings(&inv["miss"]).join("; ");
    let (cls, _) = json(&["config-check", &lines]);
    assert_eq!(cls["corollary_type"], "a");
    assert_eq!(cls["admissible"], true);
}

#[test]
fn apply_and_verify_equiv() {
    let out = planebir(&["apply", "x ; x*y", "2", "1/3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(2, 2/3)");
    let swap = wordfile("aff 0 1 1 0 0 0\n");
    let s = swap.path().to_str().unwrap();
    let (v, code) = json(&["verify-equiv", "x ; x*y", "x*y ; y", s, s]);
    assert_eq!(code, 0);
    assert_eq!(v["equivalent"], true);
    let (v, _) = json(&["verify-equiv", "x ; x*y", "x ; y", s, s]);
    assert_eq!(v["equivalent"], false);
}

#[test]
fn info_report_schema() {
    let (v, code) = json(&["info", "x ; x*(x-1)*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["q"], 2);
    assert_eq!(v["c"], 2);
    assert_eq!(v["all_missing_are_lines"], true);
    assert_eq!(v["jacobian"], "x^2 - x");
    let eqs: Vec<&str> = v["missing_lines"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["equation"].as_str().unwrap())
        .collect();
    assert_eq!(eqs, ["x - 1", "x"]);
}

#[test]
fn exit_codes() {
    assert_eq!(planebir(&["classify", "x ; (("]).status.code(), Some(1));
    assert_eq!(planebir(&["classify", "x^2 ; y"]).status.code(), Some(2));
    let oc = wordfile("aff 0 1 1 0 0 0\ntri 1 x^2\naff 0 1 1 0 0 0\nv x^2 - x\n");
    assert_eq!(
        planebir(&["classify", oc.path().to_str().unwrap()]).status.code(),
        Some(3)
    );
    let (v, code) = json(&["peel", "x^2 ; y"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "precondition");
    assert_eq!(planebir(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let cases: [&[&str]; 3] = [
        &["--json", "classify", "x^2*y + x ; x*y + 1"],
        &["--json", "peel", "x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y"],
        &["--json", "--seed", "9", "selftest"],
    ];
    for args in cases {
        assert_eq!(planebir(args).stdout, planebir(args).stdout);
    }
}

#[test]
fn selftest_passes() {
    let out = planebir(&["selftest"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
}
