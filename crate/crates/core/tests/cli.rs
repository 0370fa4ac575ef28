//! Black-box checks of the binary: exit codes, output formats, determinism,
//! and the config-file overlay.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zeta-gaps"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn temp_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("zeta-gaps-cli-{}-{stem}", std::process::id()))
}

#[test]
fn reproduce_reports_the_recorded_point() {
    let body = stdout_json(&run(&["reproduce"]));
    assert_eq!(body["h"], 1.00026660376);
    assert_eq!(body["kappa"], 2.86638201772);
    assert_eq!(body["kappa_input"], 2.866);
    assert_eq!(body["nu"], 1.2773);
    assert_eq!(body["theta"], "1/4");
    assert_eq!(body["coeffs"].as_array().expect("coeffs array").len(), 5);
}

#[test]
fn reports_are_deterministic_modulo_runtime() {
    let mut first = stdout_json(&run(&["reproduce"]));
    let mut second = stdout_json(&run(&["reproduce"]));
    first["meta"]["runtime_ms"] = Value::Null;
    second["meta"]["runtime_ms"] = Value::Null;
    assert_eq!(first, second);
}

#[test]
fn domain_errors_exit_two_with_a_message() {
    let out = run(&["eval", "--theta", "1/2", "--coeffs", "1", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("theta must be in [0, 1/4]"),
        "stderr: {stderr}"
    );

    let out = run(&["eval", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["conjecture", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_from_the_parser_exit_two() {
    let out = run(&["--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["reproduce", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_matches_the_golden_text_and_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/help.txt");
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden);
}

#[test]
fn version_prints_the_crate_version() {
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains(env!("CARGO_PKG_VERSION")), "stdout: {text}");
}

#[test]
fn eval_accepts_rational_theta_and_reports_h() {
    let body = stdout_json(&run(&[
        "eval",
        "--theta",
        "0.25",
        "--coeffs",
        "1,-10.8998,28.9444,-22.1343,0.6148",
        "--nu",
        "1.2773",
        "--kappa",
        "2.866",
    ]));
    assert_eq!(body["h"], 1.00026660376);
    assert_eq!(body["degree"], 4);
}

#[test]
fn curve_emits_csv_with_a_header_row() {
    let out = run(&["curve", "--nu-range", "1:1.2", "--step", "0.1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "nu,kappa");
    assert_eq!(lines.len(), 4);
    for (line, nu) in lines[1..].iter().zip(["1.0", "1.1", "1.2"]) {
        assert!(line.starts_with(&format!("{nu},")), "line: {line}");
    }
}

#[test]
fn scan_csv_has_one_row_per_cell() {
    let out = run(&[
        "scan",
        "--theta",
        "0",
        "--r",
        "1",
        "--degree",
        "0,1",
        "--out-format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(
        lines[0].starts_with("theta,r,degree,kappa,nu"),
        "header: {}",
        lines[0]
    );
    // the unamplified optimum shows up in every theta = 0 row
    for line in &lines[1..] {
        assert!(line.contains("2.44948974278"), "line: {line}");
    }
}

#[test]
fn mc_check_agrees_and_exits_zero() {
    let body = stdout_json(&run(&["mc-check", "--samples", "50000", "--seed", "5"]));
    assert_eq!(body["verdict"], "agree");
    assert_eq!(body["meta"]["samples"], 50000);
    assert_eq!(body["meta"]["seed"], 5);
    for check in body["checks"].as_array().expect("checks array") {
        assert_eq!(check["pass"], true, "check: {check}");
    }
}

#[test]
// golden 12-significant-digit report values, not derivations of pi/4
#[allow(clippy::approx_constant)]
fn field_reports_exact_quarter_for_gauss() {
    let body = stdout_json(&run(&["field", "--discriminant", "-4"]));
    assert_eq!(body["arithmetic_factor"], 0.25);
    assert_eq!(body["q"], 4);
    assert_eq!(body["imaginary"], true);
    assert_eq!(body["l1"], 0.785398163397);
    assert_eq!(
        body["chi"].as_array().expect("chi table"),
        &[
            Value::from(0),
            Value::from(1),
            Value::from(0),
            Value::from(-1)
        ]
    );
}

#[test]
fn non_fundamental_discriminants_warn_on_stderr() {
    let out = run(&["field", "--discriminant", "-12"]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("not fundamental"), "stderr: {stderr}");
}

#[test]
fn conjecture_prints_the_exact_ratio() {
    let body = stdout_json(&run(&["conjecture", "--k", "3"]));
    assert_eq!(body["ratio"], "35/324");
    assert_eq!(body["value"], 0.108024691358);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = temp_path("report.json");
    let out = run(&[
        "conjecture",
        "--k",
        "1",
        "--out",
        path.to_str().expect("utf8 path"),
    ]);
    assert!(out.status.success());
    assert!(
        out.stdout.is_empty(),
        "stdout should be empty when --out is given"
    );
    let body: Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("report file")).unwrap();
    assert_eq!(body["ratio"], "3/4");
    std::fs::remove_file(&path).ok();
}

#[test]
fn config_file_fills_defaults_and_flags_win() {
    let path = temp_path("overlay.cfg");
    std::fs::write(&path, "k = 2\nout-format = json\n").unwrap();
    let body = stdout_json(&run(&["conjecture", "--config", path.to_str().unwrap()]));
    assert_eq!(body["ratio"], "15/64");

    let body = stdout_json(&run(&[
        "conjecture",
        "--config",
        path.to_str().unwrap(),
        "--k",
        "4",
    ]));
    assert_eq!(body["ratio"], "63/1024");
    std::fs::remove_file(&path).ok();
}

#[test]
fn optimize_beats_the_reference_point() {
    let body = stdout_json(&run(&["optimize", "--theta", "1/4", "--degree", "4"]));
    let kappa = body["kappa"].as_f64().expect("kappa");
    assert!(kappa >= 2.866, "kappa = {kappa}");
    assert_eq!(body["kappa"], 2.87812212885);
}
