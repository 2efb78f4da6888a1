//! The `poslab` binary: outputs and exit codes.

use std::process::{Command, Output};

fn poslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poslab")).args(args).env_remove("POSLAB_CACHE").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn convert_both_ways() {
    let o = poslab(&["convert", "g:4,6,3,7,11,8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("siteswap 340362"));
    let o = poslab(&["convert", "000"]);
    assert!(stdout(&o).contains("window   (1,2,3)"));
    assert_eq!(code(&poslab(&["convert", "3x"])), 2);
}

#[test]
fn smooth_exit_codes() {
    let o = poslab(&["smooth", "--f", "342333", "--lambda", "{1,2,5}", "--method", "all"]);
    assert_eq!(code(&o), 10);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "Singular");
    assert_eq!(v["multiplicity"], 2);
    assert_eq!(code(&poslab(&["smooth", "--f", "2312", "--lambda", "{1,3}"])), 0);
    assert_eq!(code(&poslab(&["smooth", "--f", "2312", "--lambda", "{3,4}"])), 11);
    assert_eq!(code(&poslab(&["smooth", "--f", "2312", "--lambda", "{1,2,3}"])), 2);
    assert_eq!(code(&poslab(&["smooth", "--f", "333333"])), 0);
}

#[test]
fn reductions_and_atomic() {
    let o = poslab(&["del", "--f", "342333", "--lambda", "{1,2,5}", "--i", "6"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["op"], "delete 6");
    assert_eq!(code(&poslab(&["contr", "--f", "342333", "--lambda", "{1,2,5}", "--i", "3"])), 2);
    let o = poslab(&["atomic", "--f", "342333", "--lambda", "{1,2,5}"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["f"], "2312");
    assert_eq!(v["children"].as_array().unwrap().len(), 6);
}

#[test]
fn ajs_and_schubert() {
    let o = poslab(&["ajs", "--f", "2312", "--lambda", "{1,2}", "--seed", "11"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("specialization: 2·h^1"));
    assert!(out.contains("seed 11"));
    assert_eq!(code(&poslab(&["schubert", "--w", "1324", "--v", "3412"])), 10);
    assert_eq!(code(&poslab(&["schubert", "--w", "3412", "--v", "3412"])), 0);
    assert_eq!(code(&poslab(&["schubert", "--w", "3412", "--v", "1234"])), 11);
    assert_eq!(code(&poslab(&["schubert", "--w", "1234", "--v", "3214"])), 2);
}

#[test]
fn render_round_trip_and_svg_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = poslab(&["render", "--f", "342333", "--lambda", "{1,2,5}"]);
    let pd = poslab::render::parse_text(&stdout(&o)).unwrap();
    assert_eq!(pd.num_crosses(), 1);
    let out = dir.path().join("pd.svg");
    let o = poslab(&["render", "--f", "342333", "--lambda", "{1,2,5}", "--fmt", "svg", "--pd", "all", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    for i in 1..=2 {
        let svg = std::fs::read_to_string(dir.path().join(format!("pd-{i}.svg"))).unwrap();
        assert!(svg.starts_with("<svg"));
    }
}

#[test]
fn survey_resume_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let run = |env_cache: bool| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_poslab"));
        cmd.args(["survey", "--n", "4", "--jobs", "2"]);
        if env_cache {
            cmd.env("POSLAB_CACHE", &cache);
        } else {
            cmd.env_remove("POSLAB_CACHE").args(["--resume", cache.to_str().unwrap()]);
        }
        cmd.output().unwrap()
    };
    let first = run(false);
    assert_eq!(code(&first), 0);
    let full = std::fs::read(&cache).unwrap();
    std::fs::write(&cache, &full[..full.len() / 2]).unwrap();
    let second = run(true);
    assert_eq!(second.stdout, first.stdout);
    assert_eq!(std::fs::read(&cache).unwrap(), full);
    let text = String::from_utf8(full).unwrap().replacen("\"status\"", "\"stat", 1);
    std::fs::write(&cache, text).unwrap();
    let bad = run(true);
    assert_eq!(code(&bad), 74);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1"));
}
