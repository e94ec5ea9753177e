//! End-to-end runs of the installed binary: output shapes, exit codes, and
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qseries"))
        .env_remove("QSERIES_MAX_ORDER")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn verify_prints_pass_lines_at_the_default_order() {
    let out = run(&["verify", "--ids", "prop3.2.1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS prop3.2.1 (order 40)\n");
}

#[test]
fn verify_json_reports_round_trip() {
    let out = run(&["verify", "--ids", "prop3.4", "--order", "12", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let reports = parsed.as_array().expect("array of reports");
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert!(r["id"].as_str().unwrap().starts_with("prop3.4."));
        assert_eq!(r["passed"], serde_json::json!(true));
        assert_eq!(r["order"], serde_json::json!("12"));
        assert!(r["divergence"].is_null());
    }
}

#[test]
fn empty_filter_yields_an_empty_report() {
    let out = run(&["verify", "--ids", "nonexistent", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[]");
}

#[test]
fn gr_emits_the_golden_csv_table() {
    let out = run(&["gr", "--module", "Lambda0", "--slices", "8", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("slice,coefficient"));
    let coeffs: Vec<&str> = lines.map(|l| l.split_once(',').unwrap().1).collect();
    assert_eq!(
        coeffs,
        ["1", "248", "4124", "34752", "213126", "1057504", "4530744", "17333248"]
    );
}

#[test]
fn branch_json_uses_the_compact_schema() {
    let out = run(&["branch", "--order", "8", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(parsed["passed"], serde_json::json!(true));
    assert_eq!(parsed["order"], serde_json::json!(8));
}

#[test]
fn output_flag_redirects_the_report() {
    let dir = std::env::temp_dir().join("qseries-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = run(&[
        "gr",
        "--module",
        "Xi2",
        "--slices",
        "3",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "slice,coefficient\n0,7\n1,34\n2,119\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bad_configuration_exits_2() {
    let out = run(&["verify", "--order", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--order", "not-a-number"]);
    assert_eq!(out.status.code(), Some(2));
    // Orders below the registry minimum are a configuration error, not a
    // verification failure.
    let out = run(&["verify", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_qseries"))
        .env("QSERIES_MAX_ORDER", "10")
        .args(["verify", "--order", "40"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("QSERIES_MAX_ORDER"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--ids", "prop3.8", "--order", "10", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn csv_reports_carry_divergence_columns() {
    let out = run(&["theta", "--order", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,passed,order,exponent,lhs,rhs"));
    for line in lines {
        assert!(line.starts_with("theta."));
        assert!(line.contains(",true,6,,,"));
    }
}
