use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_adlvkit"));
    c.args(args).env_remove("ADLVKIT_WINDOW");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn json(args: &[&str], env: &[(&str, &str)]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = run(&a, env);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn count_gl2() {
    let (code, v) = json(&["count", "A1:gl", "--b", "w1", "--mu", "1,0"], &[]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["classes"], 1);
    assert_eq!(v["crystal"], 1);
    assert_eq!(v["verdict"], "OK");
}

#[test]
fn tensor_of_two_standard_modules() {
    let (code, v) = json(&["tensor", "A2:gl", "--mu", "1,0,0", "--mu", "1,0,0"], &[]);
    assert_eq!(code, 0);
    let got: Vec<(Vec<i64>, u64)> = v["decomposition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (serde_json::from_value(x["highest_weight"].clone()).unwrap(), x["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(got, vec![(vec![1, 1, 0], 1), (vec![2, 0, 0], 1)]);
}

#[test]
fn appendix_e7_all_b() {
    let (code, v) = json(&["appendixb", "E7:adjoint", "--all-b"], &[]);
    assert_eq!(code, 0);
    let certs = v["certifications"].as_array().unwrap();
    assert_eq!(certs.len(), 2);
    assert!(certs.iter().all(|c| c["verdict"] == true));
    assert!(certs.iter().any(|c| c["j"] == serde_json::json!([2, 5, 7])));
}

#[test]
fn window_from_environment() {
    let (_, v) = json(&["count", "A2", "--b", "w1", "--mu", "1,0"], &[("ADLVKIT_WINDOW", "9")]);
    assert_eq!(v["window"], 9);
    let (code, _) = json(&["count", "A2", "--b", "w1", "--mu", "1,0"], &[("ADLVKIT_WINDOW", "zero")]);
    assert_eq!(code, 2);
}

#[test]
fn unstable_window_exits_one() {
    let (code, v) = json(&["count", "A3:sigma=2", "--b", "id", "--mu", "0,1,0", "--window", "1"], &[]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "UNSTABLE");
    assert_eq!(v["ok"], false);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(run(&["count", "Q3", "--b", "w1", "--mu", "1,0"], &[]).status.code(), Some(2));
    assert_eq!(run(&["count", "A2", "--b", "w1", "--mu", "1"], &[]).status.code(), Some(2));
    assert_eq!(run(&["crystal"], &[]).status.code(), Some(2));
    assert_eq!(run(&["classify", "A2", "--b", "w1", "--mu", "2,0"], &[]).status.code(), Some(2));
}

#[test]
fn csv_header_and_jobs() {
    let out = run(&["--jobs", "2", "crystal", "B2", "--mu", "0,1", "--format", "csv"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("weight,multiplicity\n"));
    assert_eq!(text.lines().count(), 1 + 5);
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "A3:sigma=2", "--b", "id", "--mu", "0,1,0", "--format", "json"];
    let a = run(&args, &[]).stdout;
    let b = run(&args, &[]).stdout;
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn superbasic_rows() {
    let (code, v) = json(&["superbasic", "--n", "3", "--d", "2", "--m", "2", "--mu", "1,0,0;1,0,0"], &[]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["is_top"] == true));
    assert!(rows.iter().all(|r| r["dim_value"] == r["r_count"]));
}
