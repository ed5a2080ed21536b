use std::path::PathBuf;
use std::process::{Command, Output};

use ballconv_cli::instance::InstanceFile;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ballconv")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("json on stderr")
}

#[test]
fn shipped_fixtures_match_the_library_and_round_trip() {
    for f in ballconv::lab::fixtures() {
        let text = std::fs::read_to_string(fixture(f.name)).unwrap();
        let parsed = InstanceFile::parse(&text).unwrap();
        assert_eq!(parsed, InstanceFile::from_fixture(&f), "{}", f.name);
        assert_eq!(InstanceFile::parse(&parsed.to_json()).unwrap(), parsed);
    }
}

#[test]
fn hull_of_the_diagonal_pair_is_the_square() {
    let out = run(&["hull", "--in", fixture("square-diagonal").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let vrep: Vec<Vec<String>> = serde_json::from_value(v["hull"]["vrep"].clone()).unwrap();
    assert_eq!(vrep, vec![vec!["0", "0"], vec!["0", "1"], vec!["1", "0"], vec!["1", "1"]]);
}

#[test]
fn hull_writes_to_a_file_and_reports_whole_space() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("hull.json");
    let out = run(&["hull", "--in", fixture("far-pair").to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(v["hull"], "whole-space");
    assert!(v["center_set"].is_null());
}

#[test]
fn circumball_of_the_segment_pair() {
    let out = run(&["circumball", "--in", fixture("segment-pair").to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["radius"], "1/2");
    assert_eq!(v["center_set"]["affine_dim"], 1);
}

#[test]
fn separation_certificates() {
    let out = run(&["separate", "--in", fixture("square-diagonal").to_str().unwrap(), "--point", "3,3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["excluded"]["kind"], "point_excluded");
    assert_eq!(v["strict"]["kind"], "strict_with_radius");

    let out = run(&["separate", "--in", fixture("square-diagonal").to_str().unwrap(), "--point", "1/2,1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["kind"], "geometry");
}

#[test]
fn faces_and_b_exposed_points() {
    let out = run(&["faces", "--in", fixture("square-diagonal").to_str().unwrap()]);
    assert_eq!(stdout_json(&out)["faces"].as_array().unwrap().len(), 8);
    let out = run(&["faces", "--in", fixture("square-diagonal").to_str().unwrap(), "--b-exposed"]);
    assert!(stdout_json(&out)["b_exposed_points"].as_array().unwrap().is_empty());
    let out = run(&["faces", "--in", fixture("segment-pair").to_str().unwrap(), "--b-exposed"]);
    assert_eq!(stdout_json(&out)["b_exposed_points"].as_array().unwrap().len(), 2);
}

#[test]
fn completion_reports() {
    let out = run(&["complete", "--in", fixture("square-diagonal").to_str().unwrap(), "--candidate", "candidate"]);
    let v = stdout_json(&out);
    assert_eq!(v["criterion_I"], true);
    assert_eq!(v["criterion_III"], true);
    let out = run(&["complete", "--in", fixture("square-edge-pair").to_str().unwrap(), "--candidate", "candidate"]);
    let v = stdout_json(&out);
    assert_eq!(v["criterion_II"], false);
    assert!(v["unique_completion"].is_null());
    let out = run(&["complete", "--in", fixture("square-diagonal").to_str().unwrap(), "--candidate", "missing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spindle_probe_on_the_triangle() {
    let out = run(&["spindle", "--in", fixture("triangle").to_str().unwrap(), "--k", "2", "--budget", "50"]);
    let v = stdout_json(&out);
    assert_eq!(v["status"], "Violated");
    assert_eq!(v["witness_outside"], serde_json::json!(["1", "1"]));
    let out = run(&["spindle", "--in", fixture("triangle").to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_suites() {
    let out = run(&["check", "example1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["notes"][0].as_str().unwrap().contains("= 3/4 < 1"));
    let again = run(&["check", "example1"]);
    assert_eq!(out.stdout, again.stdout);

    let out = run(&["check", "example4"]);
    assert_eq!(stdout_json(&out)["approx"], true);

    let out = run(&["check", "lemma3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_planar_and_reject_other_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("scene.svg");
    let out = run(&["render", "--in", fixture("square-diagonal").to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains(r#"<g id="hull""#) && text.contains("<polygon"));

    let out = run(&["render", "--in", fixture("cube-corner").to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "render requires dim 2");
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2, \"norm\": ").unwrap();
    let out = run(&["hull", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["kind"], "json");

    std::fs::write(&bad, r#"{"dim": 2, "norm": "linf:2", "points": [["1/0","0"]]}"#).unwrap();
    let out = run(&["hull", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["hull", "--in", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["kind"], "io");
}
