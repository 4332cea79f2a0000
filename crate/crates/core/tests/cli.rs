use std::path::PathBuf;
use std::process::{Command, Output};

use planar_kinematics::algebra::int;
use planar_kinematics::kinematics::pk_point;
use serde_json::Value;

fn pk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pk")).args(args).env_remove("PK_WORKERS").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = pk(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn fixed_points_reports() {
    let v = json(&["fixed-points", "-k", "5", "-n", "12"]);
    assert_eq!(v["lyndon"], "66");
    assert_eq!(v["defective"], serde_json::json!([[1, 4, 7, 8, 12]]));
    assert_eq!(v["solution_count"], 65);
    let v = json(&["fixed-points", "-k", "2", "-n", "4"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    let v = json(&["fixed-points", "-k", "4", "-n", "9"]);
    assert_eq!(v["solution_count"], 14);
    assert_eq!(v["frameless"], serde_json::json!([[1, 3, 6], [1, 4, 7]]));
}

#[test]
fn amplitude_reports() {
    let v = json(&["amplitude", "-k", "3", "-n", "6", "--method", "solutions"]);
    assert_eq!(v["amplitude"], "42");
    assert_eq!(v["match"], true);
    let v = json(&["amplitude", "-k", "3", "-n", "6", "--method", "tropical"]);
    assert_eq!(v["total"], "42");
    assert_eq!(v["regions"], 27);
    assert_eq!(v["histogram"], serde_json::json!([["1", 16], ["2", 10], ["6", 1]]));
    let v = json(&["amplitude", "-k", "4", "-n", "8"]);
    assert_eq!(v["amplitude"], "24024");
    assert_eq!(v["standard_frame_sum"], "24008");
    assert_eq!(v["other_gauge_sum"], "16");
    let v = json(&["amplitude", "-k", "4", "-n", "9", "--backend", "float"]);
    assert_eq!(v["match"], true);
}

#[test]
fn tropical_from_file() {
    let path = scratch("pk36.json");
    std::fs::write(&path, pk_point(3, 6).unwrap().scaled(&int(2)).to_json()).unwrap();
    let v = json(&["amplitude", "-k", "3", "-n", "6", "--method", "tropical", "--kinematics", path.to_str().unwrap()]);
    assert_eq!(v["kinematics"], "file");
    assert!(v["total"].is_string());
}

#[test]
fn polytope_reports() {
    let v = json(&["polytope", "--which", "root", "-k", "3", "-n", "6"]);
    assert_eq!(v["fvector"], serde_json::json!([1, 14, 47, 60, 27, 1]));
    assert_eq!(v["relative_volume"], "42");
    let v = json(&["polytope", "--which", "pi", "-k", "3", "-n", "6"]);
    assert_eq!(v["fvector"], serde_json::json!([1, 27, 60, 47, 14, 1]));
    assert_eq!(v["interior_lattice_points"], 1);
    let v = json(&["polytope", "--which", "root", "-k", "2", "-n", "5"]);
    assert_eq!(v["relative_volume"], "5");
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "-k", "3", "-n", "6"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"), "{checks:?}");
    let v = json(&["verify", "-k", "4", "-n", "9", "--samples", "0"]);
    let gauge = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "gauge_independence").unwrap().clone();
    assert_eq!(gauge["status"], "pass");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["fixed-points", "-k", "4", "-n", "10"],
        vec!["amplitude", "-k", "3", "-n", "7", "--method", "tropical", "--breakdown"],
        vec!["amplitude", "-k", "3", "-n", "7", "--format", "csv"],
        vec!["polytope", "-k", "3", "-n", "6", "--checks", "--format", "table"],
        vec!["verify", "-k", "2", "-n", "6", "--seed", "5"],
    ] {
        let a = pk(&args);
        let b = pk(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = Command::new(env!("CARGO_BIN_EXE_pk"))
        .args(["amplitude", "-k", "3", "-n", "8"])
        .env("PK_WORKERS", "1")
        .output()
        .unwrap();
    let two = pk(&["--workers", "2", "amplitude", "-k", "3", "-n", "8"]);
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn output_file() {
    let path = scratch("fp.csv");
    let out = pk(&["fixed-points", "-k", "3", "-n", "7", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("class,kind\n"), "{text}");
    assert_eq!(text.lines().count(), 1 + 5);
}

#[test]
fn exit_codes() {
    assert_eq!(pk(&["fixed-points", "-k", "1", "-n", "5"]).status.code(), Some(2));
    assert_eq!(pk(&["fixed-points", "-k", "4", "-n", "5"]).status.code(), Some(2));
    assert_eq!(pk(&["fixed-points", "-k", "3"]).status.code(), Some(2));
    assert_eq!(pk(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pk(&[]).status.code(), Some(2));
    assert_eq!(pk(&["--workers", "0", "fixed-points", "-k", "2", "-n", "5"]).status.code(), Some(2));
    assert_eq!(pk(&["amplitude", "-k", "5", "-n", "12", "--backend", "exact"]).status.code(), Some(3));
    assert_eq!(pk(&["polytope", "-k", "4", "-n", "10"]).status.code(), Some(3));
    assert_eq!(pk(&["--limits"]).status.code(), Some(0));

    // a point with negative planar invariants makes the integral diverge
    let path = scratch("negative.json");
    std::fs::write(&path, pk_point(2, 5).unwrap().scaled(&int(-1)).to_json()).unwrap();
    let out = pk(&["amplitude", "-k", "2", "-n", "5", "--method", "tropical", "--kinematics", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}
