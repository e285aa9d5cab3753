//! End-to-end runs of the compiled binary: golden outputs, JSON schemas,
//! and the exit-code contract including the injected-failure path.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellomian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid JSON")
}

#[test]
fn partitions_json_golden() {
    let out = stdout_of(&["partitions", "--set", "lambda", "--n", "4", "--k", "2", "--format", "json"]);
    assert_eq!(out.trim(), r#"{"n":4,"k":2,"vectors":[[0,2,0],[1,0,1]]}"#);
}

#[test]
fn partitions_table_lists_padded_vectors() {
    let out = stdout_of(&["partitions", "--set", "theta", "--n", "4", "--k", "2", "--format", "table"]);
    assert_eq!(out, "(0,2,0,0)\n(1,0,1,0)\n");
}

#[test]
fn bell_text_golden() {
    let out = stdout_of(&["bell", "--kind", "exp", "--partial", "4,2", "--format", "text"]);
    assert_eq!(out.trim(), "3*u2^2 + 4*u1*u3");
}

#[test]
fn bell_methods_agree_in_json() {
    let direct = json_of(&["bell", "--kind", "exp", "--partial", "6,3", "--scaled", "--format", "json"]);
    for method in ["duan", "conv", "diff"] {
        let via = json_of(&[
            "bell", "--kind", "exp", "--partial", "6,3", "--scaled", "--method", method,
            "--format", "json",
        ]);
        assert_eq!(via["poly"], direct["poly"], "method {method}");
        assert_eq!(via["method"], method);
    }
    assert_eq!(direct["kind"], "exp");
    assert_eq!(direct["n"], 6);
    assert_eq!(direct["k"], 3);
    assert_eq!(direct["scaled"], true);
}

#[test]
fn bell_complete_ordinary_recursions_agree() {
    let direct = json_of(&["bell", "--kind", "ord", "--complete", "5"]);
    for method in ["conv", "diff"] {
        let via = json_of(&["bell", "--kind", "ord", "--complete", "5", "--method", method]);
        assert_eq!(via["poly"], direct["poly"], "method {method}");
    }
}

#[test]
fn adomian_text_golden() {
    let out = stdout_of(&["adomian", "--n", "2", "--nonlinearity", "exp:1", "--format", "text"]);
    assert_eq!(out.trim(), "(u2 + 1/2*u1^2)*exp(u0)");
}

#[test]
fn adomian_abstract_json_shape() {
    let v = json_of(&["adomian", "--n", "3", "--format", "json"]);
    assert_eq!(v["n"], 3);
    let parts = v["parts"].as_object().unwrap();
    assert_eq!(parts.keys().collect::<Vec<_>>(), vec!["1", "2", "3"]);
}

#[test]
fn adomian_poly_json_round_trips() {
    let v = json_of(&["adomian", "--n", "4", "--nonlinearity", "exp:1", "--format", "json"]);
    let poly = bellomian::MultiPoly::from_json_str(&v["poly"].to_string()).unwrap();
    let direct = bellomian::adomian::evaluate(
        &bellomian::adomian::rach(4).unwrap(),
        &bellomian::adomian::Nonlinearity::Exp { rate: bellomian::MultiPoly::one() },
        &bellomian::adomian::U0::Symbolic,
    )
    .unwrap();
    assert_eq!(poly, direct.poly);
}

#[test]
fn adomian_methods_agree() {
    let base = json_of(&["adomian", "--n", "5"]);
    for method in ["bell", "ordbell", "rec1", "rec2", "oracle"] {
        let via = json_of(&["adomian", "--n", "5", "--method", method]);
        assert_eq!(via["parts"], base["parts"], "method {method}");
    }
}

#[test]
fn verify_sweep_succeeds() {
    let v = json_of(&["verify", "--identity", "exp", "--max", "8"]);
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 8 * 5);
    let out = run(&["verify", "--identity", "binomial", "--max", "9"]);
    assert!(out.status.success());
}

#[test]
fn verify_single_order_with_m() {
    let v = json_of(&["verify", "--identity", "binomial", "--n", "2", "--m", "5"]);
    let report = &v["reports"][0];
    assert_eq!(report["holds"], true);
    assert_eq!(report["m"], 5);
    assert!(report.get("lhs").is_none(), "sides are serialized only on failure");
}

#[test]
fn verify_failure_reports_both_sides_and_exits_one() {
    let out = run(&["verify", "--identity", "exp", "--n", "2", "--self-test-fail"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["all_hold"], false);
    let failing = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["holds"] == false)
        .unwrap();
    assert_eq!(failing["lhs"], "0");
    assert_eq!(failing["rhs"], "1");
}

#[test]
fn adm_json_reports_match() {
    for ode in ["exp", "power", "linear"] {
        let v = json_of(&["adm", "--ode", ode, "--order", "6"]);
        assert_eq!(v["matches_closed_form"], true, "ode {ode}");
        assert_eq!(v["components"].as_array().unwrap().len(), 7);
        assert_eq!(v["first_mismatch"], Value::Null);
    }
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let v = json_of(&["verify-all", "--max", "6", "--format", "json"]);
    assert_eq!(v["all_pass"], true);
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["partitions", "bell-routes", "adomian-routes", "identities", "adm"]);
    let sequential = run(&["verify-all", "--max", "4", "--sequential"]);
    assert!(sequential.status.success());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bell", "--kind", "ord", "--partial", "3,2", "--scaled"][..],
        &["bell", "--kind", "exp", "--partial", "3,2", "--method", "conv"][..],
        &["bell", "--kind", "exp", "--complete", "4", "--scaled", "--method", "duan"][..],
        &["partitions", "--set", "lambda", "--n", "2", "--k", "5"][..],
        &["verify", "--identity", "binomial", "--n", "3"][..],
        &["adomian", "--n", "2", "--u0", "1"][..],
        &["nonsense"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}
