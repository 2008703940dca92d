// SPDX-License-Identifier: MIT OR Apache-2.0

use std::process::{Command, Output};

use serde_json::Value;

fn atilde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atilde")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = atilde(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn roots_listing() {
    let v = json(&["roots", "--n", "3", "--max-m", "0"]);
    assert_eq!(v.as_array().unwrap().len(), 6);
    let v = json(&["roots", "--n", "3", "--max-m", "1", "--class", "schur"]);
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["class"]["tag"].as_str().unwrap().starts_with("schur")));
    assert_eq!(atilde(&["roots", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn curve_words() {
    let v = json(&["curve", "--root", "2,2,1,1"]);
    assert_eq!(v["word"]["base"], 1);
    assert_eq!(v["word"]["letters"], serde_json::json!([1, 2, 3, 4]));
    let v = json(&["curve", "--root", "0,1,0"]);
    assert_eq!(v["word"]["base"], 2);
    assert_eq!(v["word"]["letters"], serde_json::json!([]));
    let out = atilde(&["curve", "--root", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn intersections() {
    let v = json(&["intersect", "--a", "1,2,1", "--b", "3,4,3"]);
    assert_eq!(
        (v["formula"].as_u64(), v["plane"].as_u64(), v["annulus"].as_u64()),
        (Some(2), Some(2), Some(2))
    );
    assert!(v.get("self").is_none());
    let v = json(&["intersect", "--a", "1,2,1", "--b", "1,2,1"]);
    assert_eq!(v["formula"], 2);
    assert_eq!(v["self"]["plane"], 1);
    let v = json(&["intersect", "--a", "1,2,1", "--b", "2,3,2", "--model", "plane"]);
    assert_eq!(v["plane"], 2);
    assert!(v.get("annulus").is_none());
    assert_eq!(atilde(&["intersect", "--a", "1,2,1", "--b", "1,2,1,1"]).status.code(), Some(2));
}

#[test]
fn ext_queries() {
    let v = json(&["ext", "--a", "1,2,1", "--b", "3,4,3"]);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["category"], "cluster");
    let v = json(&["ext", "--a", "1,2,1", "--b", "1,2,1", "--category", "module"]);
    assert_eq!(v["dimension"], 1);
}

#[test]
fn verify_exit_codes() {
    let out = atilde(&["verify", "--n", "3", "--max-m", "1", "--max-lambda", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().last().unwrap().contains("failed 0"), "{text}");
    let out = atilde(&["verify", "--n", "3", "--max-m", "1", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&["verify", "--n", "5..3", "--json"]);
    assert_eq!(v["rows"], serde_json::json!([]));
    assert_eq!(atilde(&["verify", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn render_files() {
    let dir = std::env::temp_dir().join(format!("atilde-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.svg");
    let out = atilde(&[
        "render",
        "--root",
        "1,2,1",
        "--b",
        "3,4,3",
        "--surface",
        "annulus",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert!(text.contains("class=\"crossing\""));
    let bad = dir.join("missing").join("x.svg");
    assert_eq!(
        atilde(&["render", "--root", "1,2,1", "--out", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
