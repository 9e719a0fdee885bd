use std::process::{Command, Output};

use legendre_gf::identities::verify_all_ids;
use legendre_gf::VerifyReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legendre-gf")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn main_identity_passes() {
    let out = run(&["verify", "main1", "--order", "40"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS main1"));
}

#[test]
fn verify_all_json_round_trips() {
    let out = run(&["verify", "all", "--order", "30", "--json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let line = text.trim_end();
    let reports: Vec<VerifyReport> = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&reports).unwrap(), line);
    let ids: Vec<_> = reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, verify_all_ids());
    assert!(reports.iter().all(|r| r.pass));

    // no floats other than the timing field
    let raw: Value = serde_json::from_str(line).unwrap();
    for r in raw.as_array().unwrap() {
        assert!(r["residual"].is_null() || r["residual"].is_string());
        assert!(r["order_or_digits"].is_u64());
    }
}

#[test]
fn usage_errors_exit_two_without_output() {
    for args in [
        vec!["modular", "--row", "VII2", "--digits", "40"],
        vec!["eval", "--row", "VII7"],
        vec!["verify", "nonsense"],
        vec!["verify", "eisenstein:VII2"],
        vec!["verify", "cooper-forms", "--order", "5"],
        vec!["verify", "quartic", "--digits", "20"],
        vec!["verify", "pi-check"],
        vec!["pi-check", "--a", "1", "--b", "0", "--w", "1/20"],
        vec!["pi-check", "--a", "1", "--b", "0", "--w", "1/27"],
        vec!["seq", "inner-sum"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    // Σ u_n·0ⁿ = 1 is not 1/(π√7)
    let out = run(&["pi-check", "--a", "1", "--b", "0", "--w", "0", "--json"]);
    assert_eq!(code(&out), 1);
    let reports: Vec<VerifyReport> = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert!(!reports[0].pass);
}

#[test]
fn exit_code_follows_pass_flags() {
    assert_eq!(code(&run(&["verify", "wan", "table1", "--order", "10"])), 0);
    assert_eq!(code(&run(&["verify", "table1", "eval:VII1", "--digits", "20"])), 1);
}

#[test]
fn eval_reports_sides() {
    let out = run(&["eval", "--row", "VII1", "--digits", "20"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL eval:VII1"));
    assert!(text.lines().any(|l| l.starts_with("ratio 2")));
}

#[test]
fn modular_row_values() {
    let out = run(&["modular", "--row", "VII1", "--digits", "30", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(v["row"], "VII1");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    let w = v["values"].as_array().unwrap().iter().find(|p| p[0] == "w(tau)").unwrap();
    let w: f64 = w[1].as_str().unwrap().parse().unwrap();
    assert!((w - 0.008).abs() < 1e-15);
}

#[test]
fn sequences_print() {
    let out = run(&["seq", "u", "--count", "5", "--json"]);
    assert_eq!(stdout(&out).trim_end(), r#"{"sequence":"u","terms":["1","4","48","760","13840"]}"#);
    let out = run(&["seq", "legendre", "--count", "4", "--x", "-1/2"]);
    let last = stdout(&out).lines().last().unwrap().to_string();
    assert_eq!(last.split_whitespace().collect::<Vec<_>>(), ["3", "7/16"]);
}

#[test]
fn list_covers_rows_and_ids() {
    let out = run(&["list", "--json"]);
    let v: Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
    let ids = v["identities"].as_array().unwrap();
    assert_eq!(ids.iter().filter(|i| i["in_verify_all"] == true).count(), verify_all_ids().len());
    assert!(ids.iter().any(|i| i["id"] == "pi-check"));
}
