use std::process::{Command, Output};

use nodal_hilb::series::json::series_from_json;
use nodal_hilb::series::LaurentPoly;
use nodal_hilb::verify::printed::GOLDEN_X3Y3_TOTAL_10;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodal-hilb")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_of_the_node() {
    let o = run(&["series", "--u", "1", "--v", "1", "--nmax", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = series_from_json(stdout(&o).trim()).unwrap();
    let expected: LaurentPoly = "1+Q+Q^2+Q^2T^2+Q^3+2Q^3T^2+Q^4+3Q^4T^2+Q^5+4Q^5T^2".parse().unwrap();
    assert_eq!(s.to_poly(), expected);
}

#[test]
fn series_total_degree_reproduces_golden() {
    let o = run(&["series", "--u", "3", "--v", "3", "--nmax", "10", "--truncation", "total_degree"]);
    assert_eq!(o.status.code(), Some(0));
    let s = series_from_json(stdout(&o).trim()).unwrap();
    assert_eq!(s.to_poly(), GOLDEN_X3Y3_TOTAL_10.parse().unwrap());
}

#[test]
fn series_at_degree_zero() {
    let o = run(&["series", "--u", "2", "--v", "5", "--nmax", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"nmax":0,"coeffs":[[0,[[0,"1"]]]]}"#);
}

#[test]
fn series_usage_errors() {
    let o = run(&["series", "--u", "3", "--v", "7", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("u=v-1"));
    assert_eq!(run(&["series", "--u", "1", "--v", "1", "--nmax", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--u", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["series", "--u", "4", "--v", "5", "--nmax", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["enumerate", "--n", "6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn enumerate_plane() {
    let one = run(&["enumerate", "--n", "1"]);
    assert_eq!(one.status.code(), Some(0));
    let lines: Vec<String> = stdout(&one).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(v["layers"], serde_json::json!([{"kind": 2, "i": 1, "j": 1}]));
    assert_eq!(stdout(&run(&["enumerate", "--n", "2"])).lines().count(), 3);
    let ascii = stdout(&run(&["enumerate", "--n", "1", "--format", "ascii"]));
    assert!(ascii.starts_with("[2,(1,1)]"));
}

#[test]
fn enumerate_curves() {
    let o = run(&["enumerate", "--u", "1", "--v", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["enumerate", "--u", "3", "--v", "3", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 11);
    assert_eq!(run(&["enumerate", "--u", "3", "--v", "5", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--u", "3", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "ors_xyv", "--v", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(reports[0]["name"], "ors_xyv_v4");
    assert_eq!(reports[0]["status"], "PASS");
    assert!(reports[0]["runtime_ms"].is_u64());

    let o = run(&["verify", "--suite", "durfee", "--kmax", "12", "--nmax", "24"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_failure_exits_one() {
    let o = run(&["verify", "--suite", "durfee", "--kmax", "1", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(reports[0]["status"], "FAIL");
    assert_eq!(reports[0]["first_divergence"]["degree"], 3);
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_all() {
    let o = run(&["verify", "--suite", "all", "--profile"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("checks:"));
}
