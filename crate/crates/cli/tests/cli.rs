use std::process::{Command, Output};

use serde_json::Value;

fn spin_nh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spin-nh"))
        .args(args)
        .env("SPIN_NH_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = spin_nh(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), v)
}

#[test]
fn verify_b3_passes() {
    let out = spin_nh(&[
        "verify",
        "--variant",
        "spin",
        "--type",
        "b",
        "--rank",
        "3",
        "--max-degree",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS relations/spin/B3"));
}

#[test]
fn verify_even_a3_passes() {
    let (code, v) = json(&[
        "verify",
        "--variant",
        "even",
        "--type",
        "a",
        "--rank",
        "3",
        "--max-degree",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn schubert_d2_lists_four_polynomials() {
    let (code, v) = json(&["schubert", "--type", "d", "--rank", "2", "--all"]);
    assert_eq!(code, 0);
    let polys = v["result"]["polynomials"].as_array().unwrap();
    assert_eq!(polys.len(), 4);
    let names: Vec<&str> = polys
        .iter()
        .map(|p| p["polynomial"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["2", "x1 + x2", "x1 - x2", "x1^2"]);
}

#[test]
fn schubert_single_element_by_word() {
    let (code, v) = json(&[
        "schubert",
        "--type",
        "b",
        "--rank",
        "2",
        "--element",
        "s1 s2 s1 s2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 1);
    assert_eq!(v["result"]["polynomials"][0]["polynomial"], "x1^3*x2");
}

#[test]
fn matrix_units_b2_over_integers() {
    let out = spin_nh(&[
        "matrix-units",
        "--type",
        "b",
        "--rank",
        "2",
        "--domain",
        "int",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("64 of 64"));
}

#[test]
fn reports_carry_schema_version() {
    let (_, v) = json(&[
        "lambda",
        "--type",
        "b",
        "--rank",
        "2",
        "--op",
        "series",
        "--truncate",
        "10",
    ]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "lambda");
    assert_eq!(v["passed"], true);
}

#[test]
fn lambda_membership() {
    let (code, v) = json(&[
        "lambda",
        "--type",
        "b",
        "--rank",
        "2",
        "--op",
        "member",
        "--poly",
        "x1^2+x2^2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["member"], true);
    let (_, v) = json(&[
        "lambda", "--type", "b", "--rank", "2", "--op", "member", "--poly", "x1",
    ]);
    assert_eq!(v["result"]["member"], false);
}

#[test]
fn pbw_normal_form_round_trips_through_the_parser() {
    let (code, v) = json(&[
        "pbw",
        "--type",
        "b",
        "--rank",
        "2",
        "--expr",
        "d1 x1 + x1 d1",
    ]);
    assert_eq!(code, 0);
    let normal = v["result"]["element"].as_str().unwrap().to_string();
    let (_, again) = json(&["pbw", "--type", "b", "--rank", "2", "--expr", &normal]);
    assert_eq!(again["result"]["element"], normal.as_str());
}

#[test]
fn same_seed_gives_identical_json() {
    let a = spin_nh(&["check-all", "--profile", "quick", "--json", "--seed", "11"]);
    let b = spin_nh(&["check-all", "--profile", "quick", "--json", "--seed", "11"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        spin_nh(&["verify", "--type", "d", "--rank", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spin_nh(&["pbw", "--rank", "2", "--expr", "x5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spin_nh(&["pbw", "--rank", "2", "--expr", "x1 +"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spin_nh(&["lambda", "--op", "member"]).status.code(),
        Some(2)
    );
    assert_eq!(spin_nh(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_spin-nh"))
        .args(["verify", "--rank", "1"])
        .env("SPIN_NH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
