//! End-to-end runs of the `obc` binary.

use std::process::{Command, Output};

fn obc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obc")).args(args).env("OBC_SEED", "7").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn compute_g_text() {
    let o = obc(&["compute-g", "--f", "t^2-4/9", "--delta1", "d1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t^2 + d1 - 4/9");
    let j = obc(&["compute-g", "--f", "t^2-4/9", "--delta1", "d1", "--format", "json"]);
    assert_eq!(json(&j)["g"], "t^2 + d1 - 4/9");
}

#[test]
fn compute_g_linear() {
    let o = obc(&["compute-g", "--f", "t", "--delta1", "0", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t");
}

#[test]
fn basis_counts_match_dimension() {
    let o = obc(&["basis", "--bottom", "v^", "--top", "v^", "--ell", "2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["count"], 32);
    assert_eq!(v["hom_dimension"], 32);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 32);
    let v = json(&obc(&["basis", "--bottom", "vv^", "--top", "vv^", "--ell", "2"]));
    assert_eq!(v["count"], v["hom_dimension"]);
    assert_eq!(v["count"], 384);
}

#[test]
fn output_is_stable() {
    let a = obc(&["verify-relations", "--samples", "2"]);
    let b = obc(&["verify-relations", "--samples", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn normalize_and_compose() {
    let o = obc(&["normalize", "(pow white 2)", "--format", "text"]);
    assert!(o.status.success());
    let id = obc(&["normalize", "id1", "--format", "text"]);
    assert_eq!(stdout(&o), stdout(&id));
    let c = obc(&["compose", "white", "white"]);
    assert!(c.status.success());
    assert_eq!(json(&c), json(&obc(&["normalize", "id1"])));
}

#[test]
fn bad_input_is_a_json_error() {
    let o = obc(&["normalize", "(bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let e: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(e["error"].is_string());
}

#[test]
fn verification_commands_pass() {
    for args in [
        &["verify-relations", "--samples", "3"][..],
        &["verify-walled", "--r", "1", "--t", "1", "--cyclotomic"],
        &["verify-schurweyl", "--module", "v", "--n", "2"],
        &["verify-schurweyl", "--module", "verma", "--lambda-blocks", "0,1,0:2:1/3", "--cap", "3"],
        &["sergeev", "--r", "2", "--lambda-blocks", "0,1,0:4:1/3"],
        &["dominance", "--a", "0", "--b", "1", "--generic", "1/3", "--points", "4"],
        &["rank", "--r", "2", "--ell", "2", "--lambda-blocks", "0,1,0:4:1/3"],
    ] {
        let o = obc(args);
        assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn out_file_and_tikz() {
    let dir = std::env::temp_dir().join(format!("obc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.tex");
    let o = obc(&["export-tikz", "(compose (tensor black id1) cross)", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let s = std::fs::read_to_string(&path).unwrap();
    assert!(s.contains("\\begin{tikzpicture}"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn rank_csv_has_header() {
    let o = obc(&["rank", "--r", "1", "--ell", "2", "--lambda-blocks", "0,1,0:2:1/3", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("row,"));
}
