//! End-to-end tests of the command line interface against the committed
//! data files, including exit codes and JSON round-trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alexmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn alexander_wedge_artinian_part() {
    let out = run(&[
        "alexander",
        "--input",
        &data("wedge.json"),
        "--degree",
        "1",
        "--s0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v, json!({"qdim": 1, "t_ops": [[[1]]]}));
}

#[test]
fn alexander_wedge_presentation_decomposition() {
    let out = run(&[
        "alexander",
        "--input",
        &data("wedge.json"),
        "--degree",
        "1",
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["decomposition"]["free_rank"], json!(1));
    assert_eq!(v["decomposition"]["factors"].as_array().unwrap().len(), 1);
}

#[test]
fn mellin_unipotent_stalk() {
    let out = run(&[
        "mellin",
        "--input",
        &data("unipotent2.json"),
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["degree"], json!(1));
    assert_eq!(v["qdim"], json!(2));
    assert_eq!(v["t_ops"], json!([[[1, -1], [0, 1]]]));
}

#[test]
fn fibration_and_check_roundtrip() {
    // compute the degree-2 invariants, re-ingest them as a results bundle,
    // and confirm the checks reproduce the same verdicts
    let out = run(&[
        "fibration",
        "--input",
        &data("nodal_cubic_fibration.json"),
        "--degree",
        "2",
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let module = stdout_json(&out);
    assert_eq!(module["qdim"], json!(2));

    let dir = std::env::temp_dir().join("alexmod-cli-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let results = dir.join("results.json");
    std::fs::write(
        &results,
        serde_json::to_string(&json!({ "modules": { "2": module } })).unwrap(),
    )
    .unwrap();

    let check = run(&[
        "check",
        "--input",
        results.to_str().unwrap(),
        "--context",
        &data("nodal_cubic_context.json"),
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(check.status.code(), Some(0));
    let report = stdout_json(&check);
    let checks = report["checks"].as_array().unwrap();
    let jordan = checks
        .iter()
        .find(|c| c["name"] == json!("jordan_bound[2]"))
        .unwrap();
    assert_eq!(jordan["status"], json!("pass"));
    let ss = checks
        .iter()
        .find(|c| c["name"] == json!("semisimple[2]"))
        .unwrap();
    assert_eq!(ss["observed"], json!("not semisimple"));

    // and the pre-committed bundle agrees
    let direct = run(&[
        "check",
        "--input",
        &data("nodal_cubic_results.json"),
        "--context",
        &data("nodal_cubic_context.json"),
        "--format",
        "json",
    ]);
    assert_eq!(direct.status.code(), Some(0));
    let direct_report = stdout_json(&direct);
    let direct_jordan = direct_report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == json!("jordan_bound[2]"))
        .cloned()
        .unwrap();
    assert_eq!(direct_jordan, jordan.clone());
}

#[test]
fn check_violation_exits_three() {
    let out = run(&[
        "check",
        "--input",
        &data("negative_control_results.json"),
        "--context",
        &data("negative_control_context.json"),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("vanishing_range[0]: violation"));
}

#[test]
fn module_snf_and_s0() {
    let out = run(&[
        "module",
        "--snf",
        "--input",
        &data("module_t1sq.json"),
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["decomposition"]["free_rank"], json!(0));

    let s0 = run(&[
        "module",
        "--s0",
        "--input",
        &data("module_t1sq.json"),
        "--format",
        "json",
    ]);
    assert_eq!(s0.status.code(), Some(0));
    let sv = stdout_json(&s0);
    assert_eq!(sv["qdim"], json!(2));
    assert_eq!(sv["t_ops"], json!([[[0, -1], [1, 2]]]));
}

#[test]
fn torus_identity_class_two_variables() {
    let out = run(&[
        "alexander",
        "--input",
        &data("torus_identity.json"),
        "--degree",
        "2",
        "--s0",
        "--format",
        "json",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["qdim"], json!(1));
    assert_eq!(v["t_ops"], json!([[[1]], [[1]]]));
}

#[test]
fn bad_input_exits_one() {
    let out = run(&["alexander", "--input", "/no/such/file.json", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // cocycle that fails to close
    let dir = std::env::temp_dir().join("alexmod-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        serde_json::to_string(&json!({
            "vertices": 3,
            "simplices": [[0], [1], [2], [0,1], [0,2], [1,2], [0,1,2]],
            "cocycle": {"n": 1, "edges": [
                {"edge": [0,1], "value": [1]},
                {"edge": [1,2], "value": [1]},
                {"edge": [0,2], "value": [0]}
            ]}
        }))
        .unwrap(),
    )
    .unwrap();
    let out = run(&["alexander", "--input", bad.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("close"));
}
