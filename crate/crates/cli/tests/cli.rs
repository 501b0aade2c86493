//! End-to-end checks of the binary: output shapes and the exit-code
//! contract (0 = pass, 1 = check failure, 2 = usage error).

use std::process::{Command, Output};

fn fmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_examples() {
    let out = fmzv(&[
        "compute",
        "--flavor",
        "zeta",
        "--index",
        "2,1",
        "--prime",
        "7",
        "--mod-power",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3 (mod 7^1)");

    let out = fmzv(&[
        "compute", "--flavor", "head", "--index", "1", "--t", "1/2", "--prime", "5",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3 (mod 5^1)");

    let out = fmzv(&[
        "compute",
        "--flavor",
        "zeta-star",
        "--index",
        "{1}^3",
        "--prime",
        "11",
        "--mod-power",
        "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).trim().ends_with("(mod 11^2)"));

    let out = fmzv(&[
        "compute", "--flavor", "harmonic", "--index", "2,1", "--args", "-1,-1", "--prime", "13",
    ]);
    assert!(out.status.success());
}

#[test]
fn compute_usage_errors_exit_2() {
    // p divides the denominator of t
    let out = fmzv(&[
        "compute", "--flavor", "head", "--index", "1", "--t", "1/5", "--prime", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // composite modulus
    let out = fmzv(&[
        "compute", "--flavor", "zeta", "--index", "2", "--prime", "9",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // malformed index
    let out = fmzv(&[
        "compute", "--flavor", "zeta", "--index", "2,0", "--prime", "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // missing argument for a one-variable flavor
    let out = fmzv(&[
        "compute", "--flavor", "tail", "--index", "2,1", "--prime", "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prove_pass_and_guard() {
    let out = fmzv(&[
        "prove",
        "--identity",
        "dualsum.strict.alt",
        "--index",
        "2,1",
        "--big-n",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    let out = fmzv(&["prove", "--identity", "euler", "--big-n", "9"]);
    assert_eq!(out.status.code(), Some(2)); // out of guard

    let out = fmzv(&["prove", "--identity", "nonsense", "--big-n", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // a genuinely false instance (the shifted J^N form needs n <= N) exits 1
    let out = fmzv(&[
        "prove",
        "--identity",
        "jn.shifted",
        "--big-n",
        "1",
        "--n",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));

    let dir = std::env::temp_dir().join("fmzv-prove-dump.txt");
    let path = dir.to_string_lossy().into_owned();
    let out = fmzv(&[
        "prove",
        "--identity",
        "dualsum.onevar",
        "--index",
        "2,1",
        "--big-n",
        "3",
        "--dump",
        &path,
    ]);
    assert!(out.status.success());
    let dumped = std::fs::read_to_string(&path).unwrap();
    assert!(dumped.contains("lhs =") && dumped.contains("rhs ="));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn check_and_exit_codes() {
    let out = fmzv(&[
        "check",
        "--id",
        "fmzv.duality",
        "--params",
        "kk=2.1",
        "--pmin",
        "2",
        "--pmax",
        "31",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all pass"));

    let out = fmzv(&["check", "--id", "no.such.id"]);
    assert_eq!(out.status.code(), Some(2));

    let out = fmzv(&["check", "--id", "ppt.star", "--pmin", "9", "--pmax", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_json_shape_and_empty_filter() {
    let dir = std::env::temp_dir().join("fmzv-suite-report.json");
    let path = dir.to_string_lossy().into_owned();
    let out = fmzv(&[
        "suite",
        "--level",
        "quick",
        "--pmax",
        "13",
        "--filter",
        "fmzv.duality",
        "--out",
        &path,
        "--jobs",
        "2",
    ]);
    assert!(
        out.status.success(),
        "suite failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, vec!["config", "records", "summary", "timings"]);
    let rec = &v["records"][0];
    for key in ["id", "params", "p", "n", "lhs", "rhs", "pass"] {
        assert!(rec.get(key).is_some(), "record missing {key}");
    }
    assert!(rec["lhs"].is_string() && rec["rhs"].is_string());
    let _ = std::fs::remove_file(&path);

    // a filter matching nothing still succeeds with an empty report
    let out = fmzv(&[
        "suite", "--level", "quick", "--filter", "zzz.*", "--format", "csv",
    ]);
    assert!(out.status.success());
}

#[test]
fn list_and_tables() {
    let out = fmzv(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fmzv.repeat.star"));
    assert!(text.contains("dualsum.star.alt"));

    let out = fmzv(&["table", "guards"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("p > mk+2"));

    let out = fmzv(&[
        "table",
        "values",
        "--id",
        "sv.a2.ones.half",
        "--params",
        "m=2",
        "--pmin",
        "7",
        "--pmax",
        "31",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| 7 |") && text.contains("| 31 |"));

    let out = fmzv(&["table", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
