use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coring-lab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn catalog_run_trivial_entries() {
    let out = lab(&["catalog", "run", "trivial-*"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let reports = json(&out);
    let rows: Vec<(&str, bool, bool)> = reports
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (r["id"].as_str().unwrap(), r["coseparable"].as_bool().unwrap(), r["semisimple"]["semisimple"].as_bool().unwrap())
        })
        .collect();
    assert_eq!(rows, [("trivial-M2", true, true), ("trivial-Q", true, true), ("trivial-dual-numbers", true, false)]);
}

#[test]
fn empty_filter_is_an_empty_passing_report() {
    let out = lab(&["catalog", "run", "no-such-*"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), Value::Array(vec![]));
}

#[test]
fn comatrix_full_pipeline() {
    let out = lab(&["catalog", "run", "comatrix-2", "--theorem"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)[0];
    assert_eq!(r["coseparable"], true);
    assert_eq!(r["semisimple"]["semisimple"], true);
    let t = &r["theorem"];
    assert_eq!(t["coseparable"], true);
    assert!(t["base_changes"].as_array().unwrap().iter().all(|v| v["semisimple"] == true));
    assert!(t["tensor_products"].as_array().unwrap().iter().all(|v| v["semisimple"] == true));
    assert_eq!(t["with_opposite"]["semisimple"], true);
    assert_eq!(t["cross_check"], true);
}

#[test]
fn theorem_verdicts() {
    let out = lab(&["theorem", "--catalog", "dual-dual-numbers"]);
    assert_eq!(out.status.code(), Some(0));
    let t = json(&out);
    assert_eq!(t["applicable"], true);
    assert_eq!(t["coseparable"], false);
    assert!(t["base_changes"].as_array().unwrap().iter().all(|v| v["semisimple"] == false));
    assert_eq!(t["with_opposite"]["semisimple"], false);

    let out = lab(&["theorem", "--catalog", "trivial-dual-numbers"]);
    assert_eq!(out.status.code(), Some(0));
    let t = json(&out);
    assert_eq!(t["applicable"], false);
    assert!(t["note"].as_str().unwrap().contains("hypothesis fails"));
    assert_eq!(t["coseparable"], true);
    assert_eq!(t["with_opposite"]["semisimple"], false);
}

#[test]
fn theorem_with_custom_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "d.json", r#"{"kind": "group_like", "n": 3}"#);
    let out = lab(&["theorem", "--catalog", "grouplike-2", "--ext", "x^2 - 3", "--with", &d]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let t = json(&out);
    assert_eq!(t["base_changes"].as_array().unwrap().len(), 1);
    assert_eq!(t["tensor_products"][0]["carrier_dim"], 6);
}

#[test]
fn reports_are_byte_identical() {
    let a = lab(&["catalog", "run", "grouplike-*"]);
    let b = lab(&["catalog", "run", "grouplike-*"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = lab(&["cosep", "--catalog", "comatrix-2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["coseparable"], true);
    assert_eq!(r["right_dual_separable"], true);
    assert_eq!(r["gamma"].as_array().unwrap().len(), 1);
}

#[test]
fn expectations_set_the_exit_code() {
    assert_eq!(lab(&["cosep", "--catalog", "dual-dual-numbers", "--expect", "false"]).status.code(), Some(0));
    assert_eq!(lab(&["cosep", "--catalog", "dual-dual-numbers", "--expect", "true"]).status.code(), Some(1));
    assert_eq!(lab(&["semisimple", "--catalog", "trivial-dual-numbers", "--expect", "false"]).status.code(), Some(0));
}

#[test]
fn exported_corings_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = lab(&["export", "coring", "sweedler-M2-diagonal"]);
    assert_eq!(out.status.code(), Some(0));
    let path = write(dir.path(), "c.json", &String::from_utf8(out.stdout).unwrap());
    let out = lab(&["check-coring", "--in", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dim"], 8);
}

#[test]
fn broken_coring_fails_with_violations() {
    let dir = tempfile::tempdir().unwrap();
    // group-like on two elements with the counit doubled
    let text = r#"{
  "kind": "explicit",
  "carrier": {
    "left": {"kind": "ground"},
    "right": {"kind": "ground"},
    "dim": 2,
    "left_action": [[[1, 0], [0, 1]]],
    "right_action": [[[1, 0], [0, 1]]]
  },
  "comult": [[1, 0], [0, 0], [0, 0], [0, 1]],
  "counit": [[2, 1]]
}"#;
    let path = write(dir.path(), "bad.json", text);
    let out = lab(&["check-coring", "--in", &path]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["valid"], false);
    assert!(r["violations"].as_array().unwrap().iter().any(|v| v["identity"].as_str().unwrap().contains("counit")));
    // decision procedures refuse invalid input
    assert_eq!(lab(&["cosep", "--in", &path]).status.code(), Some(2));
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "broken.json", "{\n  \"kind\": \"comatrix\",\n  \"n\": \n}");
    let out = lab(&["check-coring", "--in", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.json:4:"), "{err}");
    assert_eq!(lab(&["check-coring", "--in", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(lab(&["check-coring"]).status.code(), Some(2));
}

#[test]
fn comodules_and_bicomodules() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"coring": {"kind": "comatrix", "n": 2}, "side": "left"}"#);
    let out = lab(&["check-comodule", "--in", &m]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dim"], 4);
    let out = lab(&["check-bicomodule", "--catalog", "comatrix-2-square"]);
    assert_eq!(out.status.code(), Some(0));
    let out = lab(&["bicomod-equiv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert!(rows.as_array().unwrap().len() >= 5);
    assert!(rows.as_array().unwrap().iter().all(|r| r["bicomodule_to_comodule_to_bicomodule"]["carrier_identical"] == true));
}

#[test]
fn entwinings() {
    assert_eq!(lab(&["entwine", "check", "--catalog", "graded-Z2"]).status.code(), Some(0));
    let out = lab(&["entwine", "coring", "--catalog", "flip-M2-grouplike-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "explicit");
    let out = lab(&["entwine", "tensor", "--catalog", "graded-Z2", "--with-catalog", "flip-Q-grouplike-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["certificate"]["preserves_comult"], true);
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "e.json",
        r#"{"kind": "cyclic_grading", "algebra": {"kind": "cyclic_group", "n": 2}, "degrees": [0, 1], "n": 3}"#,
    );
    assert_eq!(lab(&["entwine", "check", "--in", &bad]).status.code(), Some(1));
}

#[test]
fn base_change_isomorphisms() {
    let out = lab(&["base-change", "--catalog", "comatrix-2", "--ext", "x^2 + 1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["extensions"][0]["extension"], "x^2 + 1");
    assert_eq!(r["extensions"][0]["inverse_holds"], true);
}
