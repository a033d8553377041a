//! End-to-end tests of the `zetakit` binary: golden outputs, the exit-code
//! contract, and agreement between the text and JSON encodings.

use std::process::{Command, Output};

fn zetakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetakit"))
        .args(args)
        .output()
        .expect("zetakit binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Rebuilds the exact text from a JSON record the same way the text
/// renderer does.
fn exact_text_of(record: &serde_json::Value) -> String {
    let terms = record["exact"]["terms"].as_array().expect("exact terms");
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| {
            let power = t["pi_power"].as_u64().expect("pi_power");
            let coeff = t["coeff"].as_str().expect("coeff");
            if power == 0 {
                coeff.to_string()
            } else {
                format!("({coeff})*pi^{power}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[test]
fn eval_exact_golden_values() {
    let out = zetakit(&["eval", "zeta", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-1/12\n");

    let out = zetakit(&["eval", "eta", "2"]);
    assert_eq!(stdout(&out), "(1/12)*pi^2\n");

    let out = zetakit(&["eval", "beta", "1"]);
    assert_eq!(stdout(&out), "(1/4)*pi^1\n");

    let out = zetakit(&["eval", "zeta", "-2"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn eval_unsupported_exit_codes() {
    let out = zetakit(&["eval", "zeta", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("pole"));

    let out = zetakit(&["eval", "beta", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no closed form"));

    let out = zetakit(&["eval", "zeta", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn eval_float_formats() {
    let out = zetakit(&["eval", "zeta", "2", "--format", "float"]);
    assert_eq!(stdout(&out), "1.64493406684823\n");

    let out = zetakit(&["eval", "zeta", "2", "--format", "float", "--digits", "6"]);
    assert_eq!(stdout(&out), "1.64493\n");

    let out = zetakit(&["eval", "eta", "2", "--format", "both"]);
    assert_eq!(stdout(&out), "(1/12)*pi^2\n0.822467033424113\n");
}

#[test]
fn sum_command() {
    let out = zetakit(&["sum", "--poly", "u", "--from", "1", "--to", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");

    let out = zetakit(&[
        "sum",
        "--poly",
        "u^2 + 3*u - 1/2",
        "--from",
        "-3",
        "--to",
        "4",
    ]);
    assert_eq!(stdout(&out), "52\n");

    // the whole line of integers sums to zero for f(u) = u
    let out = zetakit(&["sum", "--poly", "u", "--from", "0", "--to", "-1"]);
    assert_eq!(stdout(&out), "0\n");

    let out = zetakit(&["sum", "--poly", "u^^2", "--from", "0", "--to", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("column 3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(zetakit(&["eval", "gamma", "2"]).status.code(), Some(2));
    assert_eq!(zetakit(&["eval", "zeta"]).status.code(), Some(2));
    assert_eq!(zetakit(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        zetakit(&["verify", "--suite", "nosuch"]).status.code(),
        Some(2)
    );
    assert_eq!(
        zetakit(&["eval", "zeta", "2", "--digits", "40"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn order_cmp_outputs() {
    assert_eq!(stdout(&zetakit(&["order", "cmp", "7", "-5"])), "7 ≺ -5\n");
    assert_eq!(stdout(&zetakit(&["order", "cmp", "-5", "7"])), "7 ≺ -5\n");
    assert_eq!(stdout(&zetakit(&["order", "cmp", "3", "3"])), "3 = 3\n");
    assert_eq!(stdout(&zetakit(&["order", "cmp", "0", "-1"])), "0 ≺ -1\n");
}

#[test]
fn json_and_text_encode_the_same_value() {
    for args in [
        vec!["eval", "zeta", "-1"],
        vec!["eval", "eta", "4"],
        vec!["eval", "beta", "5"],
        vec!["sum", "--poly", "u^3 - u", "--from", "-10", "--to", "10"],
    ] {
        let text = stdout(&zetakit(&args));
        let mut json_args = args.clone();
        json_args.push("--json");
        let record: serde_json::Value =
            serde_json::from_str(&stdout(&zetakit(&json_args))).expect("valid JSON");
        assert_eq!(record["status"], "ok");
        assert_eq!(
            exact_text_of(&record),
            text.trim_end(),
            "JSON and text disagree for {args:?}"
        );
    }
}

#[test]
fn json_unsupported_record() {
    let out = zetakit(&["eval", "zeta", "1", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(record["status"], "unsupported");
    assert!(record["reason"].as_str().unwrap().contains("pole"));
    assert!(record.get("exact").is_none());
}

#[test]
fn table_text_and_json() {
    let out = zetakit(&["table", "zeta", "--from", "-4", "--to", "2"]);
    let text = stdout(&out);
    assert!(text.contains("zeta(-4) = 0\n"));
    assert!(text.contains("zeta(-1) = -1/12\n"));
    assert!(text.contains("zeta(1) unsupported:"));
    assert!(text.contains("zeta(2) = (1/6)*pi^2\n"));
    assert_eq!(out.status.code(), Some(0));

    let out = zetakit(&["table", "zeta", "--from", "-4", "--to", "2", "--json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[3]["args"][0], "-1");
    assert_eq!(exact_text_of(&rows[3]), "-1/12");
    assert_eq!(rows[5]["status"], "unsupported");
}

#[test]
fn verify_exit_codes() {
    // a passing battery: exact functional equation checks
    let out = zetakit(&["verify", "--suite", "functional-equation"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("40 checks, 40 passed, 0 failed"));

    // an unreachable tolerance must surface as a verification failure
    let out = zetakit(&[
        "verify",
        "--suite",
        "values",
        "--tol",
        "1e-30",
        "--max-terms",
        "2000",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // json output carries one report object per check
    let out = zetakit(&["verify", "--suite", "functional-equation", "--json"]);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(reports.as_array().unwrap().len(), 40);
    assert!(reports[0]["passed"].as_bool().unwrap());
}
