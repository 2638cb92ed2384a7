use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford"))
        .args(args)
        .env_remove("CLIFFORD_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let value = serde_json::from_slice(&out.stdout).expect("valid json on stdout");
    (value, out.status.code().expect("exit code"))
}

#[test]
fn parallel_lines_through_a_common_class() {
    let (v, code) = json(&["parallel", "1,u", "v,u*v"]);
    assert_eq!(code, 0);
    assert_eq!(v["parallel"], true);
    assert_eq!(v["geometric"], true);
    assert!(!v["pencil_line"].is_null());
}

#[test]
fn intersecting_lines_are_not_parallel() {
    let (v, code) = json(&["parallel", "1,u", "1,v"]);
    assert_eq!(code, 0);
    assert_eq!(v["parallel"], false);
    assert_eq!(v["geometric"], false);
    assert!(v["pencil_line"].is_null());
}

#[test]
fn translation_by_u_has_block_normal_form() {
    let (v, code) = json(&["translation", "u"]);
    assert_eq!(code, 0);
    for key in [
        "matches_pattern_f",
        "square_is_scalar",
        "matches_pattern_ideal",
        "normal_form_is_block_diagonal",
        "fixed_points_are_absolute_point_plus_lp",
        "characteristic_polynomial_is_x4_plus_b4",
    ] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn translation_by_square_is_identical() {
    let (v, code) = json(&["translation", "u^2+v^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["identical_collineation"], true);
}

#[test]
fn polarity_classification() {
    let (v, code) = json(&["--samples", "5", "polarity", "1,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"], "elliptic");
    let (v, code) = json(&["--samples", "5", "polarity", "0,0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"], "null");
}

#[test]
fn fano_subplane() {
    let (v, code) = json(&["fano"]);
    assert_eq!(code, 0);
    assert_eq!(v["fano_plane"], true);
    assert_eq!(v["identities_hold"], true);
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
}

#[test]
fn double_space_axiom_example() {
    let (v, code) = json(&["double-space", "1", "u", "v"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["common_point"], true);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["parallel", "1,x", "1,u"][..],
        &["parallel", "1,u", "u^2,1"][..],
        &["polarity", "0,0,0,0"][..],
        &["translation", "0"][..],
        &["verify-all", "--suite", "no_such_suite"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_all_is_deterministic_without_timings() {
    let args = ["--samples", "3", "--seed", "11", "verify-all", "--suite", "main_theorem", "--suite", "fano"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains("fano")));
    assert!(!text.contains("millis"));
}

#[test]
fn seed_from_environment() {
    let with_flag = run(&["--samples", "2", "--seed", "5", "--json", "verify-all", "--suite", "local_quadratic"]);
    let with_env = Command::new(env!("CARGO_BIN_EXE_clifford"))
        .args(["--samples", "2", "--json", "verify-all", "--suite", "local_quadratic"])
        .env("CLIFFORD_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(with_flag.stdout, with_env.stdout);
}

#[test]
fn single_sample_run_passes() {
    let out = run(&["--samples", "1", "verify-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn injected_fault_is_detected() {
    let out = run(&["--samples", "4", "verify-all", "--suite", "main_theorem", "--inject-fault", "0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn json_report_lists_suites_in_order() {
    let (v, code) = json(&["--samples", "2", "verify-all", "--suite", "fano", "--suite", "annihilator"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 2);
}
