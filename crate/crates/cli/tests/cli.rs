use std::process::{Command, Output};

use serde_json::Value;

fn wres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wres")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn coefficients(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            if let Some(Value::String(c)) = m.get("coefficient") {
                out.push(c.clone());
            }
            m.values().for_each(|x| coefficients(x, out));
        }
        Value::Array(a) => a.iter().for_each(|x| coefficients(x, out)),
        _ => {}
    }
}

#[test]
fn exact_case_is_accepted() {
    let out = wres(&["--case", "aIII", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["case"], "aIII");
    assert_eq!(v["pi_grade"], 2);
    assert_eq!(v["paper_match"], true);
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn full_run_without_oracle_is_rejected() {
    let out = wres(&["--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let ops = v["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 2);
    assert_eq!(ops[0]["theorem"]["interior"]["coefficient"], "4/3");
}

#[test]
fn arbitration_settles_a_mismatch() {
    let out = wres(&["--case", "aII", "--format", "json", "--oracle", "arbitrate", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["paper_match"], false);
    assert_eq!(v["oracle"]["verdict"], "engine");
    assert_eq!(v["oracle"]["evidence"].as_array().unwrap().len(), 2);
}

#[test]
fn markdown_carries_every_coefficient() {
    let data = json(&wres(&["--operator", "type2", "--format", "json", "--substitute", "primitive"]));
    let text = String::from_utf8(wres(&["--operator", "type2", "--substitute", "primitive"]).stdout).unwrap();
    let mut cs = Vec::new();
    coefficients(&data, &mut cs);
    assert!(!cs.is_empty());
    for c in cs {
        assert!(text.contains(&c), "{c} missing from markdown");
    }
    assert!(text.contains("Overall: **rejected**"));
}

#[test]
fn output_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("wres-{}.json", std::process::id()));
    let out = wres(&["--case", "Phi*", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let direct = wres(&["--case", "Phi*", "--format", "json"]);
    assert_eq!(written.trim(), String::from_utf8(direct.stdout).unwrap().trim());
}

#[test]
fn catalog_dump() {
    let out = wres(&["--dump-catalog", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v.as_array().unwrap().iter().any(|r| r["symbol"] == "D^-1"));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(wres(&["--case", "zz"]).status.code(), Some(2));
    assert_eq!(wres(&["--dump-catalog", "--case", "aI"]).status.code(), Some(2));
    assert_eq!(wres(&["--operator", "type3"]).status.code(), Some(2));
}
