use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn rgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rgf"))
        .args(args)
        .env_remove("RGF_JOBS")
        .output()
        .expect("run rgf")
}

fn stdout(args: &[&str]) -> String {
    let out = rgf(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    rgf(args).status.code().expect("exit code")
}

#[test]
fn enumerate_text_and_json() {
    assert_eq!(
        stdout(&["enumerate", "--n", "4", "--k", "2", "--avoid", "13/2"]),
        "1112\n1122\n1222\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--n", "3"]),
        "111\n112\n121\n122\n123\n"
    );
    let v = json(&[
        "enumerate",
        "--n",
        "5",
        "--avoid",
        "1/23;12/3",
        "--format",
        "json",
    ]);
    assert_eq!(v["avoid"], "1/23;12/3");
    assert_eq!(v["count"], v["words"].as_array().unwrap().len());
    let v = json(&[
        "enumerate",
        "--n",
        "4",
        "--avoid",
        "w:112",
        "--format",
        "json",
    ]);
    assert!(v["words"].as_array().unwrap().iter().all(|w| w != "1123"));
}

#[test]
fn enumerate_rejects_bad_input() {
    let out = rgf(&["enumerate", "--n", "3", "--avoid", "1//2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(code(&["enumerate", "--n", "3", "--k", "4"]), 2);
    assert_ne!(code(&["enumerate"]), 0);
}

#[test]
fn stats_table_and_totals() {
    let text = stdout(&["stats", "--word", "12332412"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "pos\tletter\tlb\tls\trb\trs");
    assert_eq!(lines[1], "1\t1\t0\t0\t3\t0");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[9], "lb=6 ls=10 rb=9 rs=8");
    let eq = stdout(&["stats", "--word", "12332412", "--equal-variant"]);
    assert_eq!(eq.lines().last(), Some("lbe=10 lse=14 rbe=13 rse=12"));
    let v = json(&["stats", "--word", "1213", "--format", "json"]);
    assert_eq!(v["letters"].as_array().unwrap().len(), 4);
    assert_eq!(v["totals"]["lb"], 1);
    assert_eq!(code(&["stats", "--word", "21"]), 2);
}

#[test]
fn poly_formats() {
    assert_eq!(
        stdout(&["poly", "--n", "4", "--k", "2", "--stat", "lb"]),
        "3 + 3*q + q^2\n"
    );
    assert_eq!(
        stdout(&[
            "poly",
            "--n",
            "3",
            "--k",
            "3",
            "--stat",
            "ls",
            "--equal-variant"
        ]),
        "r^3\n"
    );
    assert_eq!(
        stdout(&["poly", "--n", "3", "--k", "3", "--stat", "lse"]),
        "r^3\n"
    );
    let latex = stdout(&["poly", "--n", "3", "--avoid", "123", "--format", "latex"]);
    assert!(!latex.trim().is_empty());
    let v = json(&["poly", "--n", "3", "--format", "json", "--jobs", "2"]);
    let total: i64 = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["c"].as_i64().unwrap())
        .sum();
    assert_eq!(total, 5);
    assert_eq!(code(&["poly", "--n", "3", "--k", "0"]), 2);
    assert_eq!(code(&["poly", "--n", "3", "--stat", "xy"]), 2);
}

#[test]
fn formula_eval_and_list() {
    assert_eq!(
        stdout(&["formula", "--id", "cor1.3.iv", "--n", "4", "--k", "2"]),
        "3\n"
    );
    let out = rgf(&["formula", "--id", "thm7.1.4", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of regime"));
    assert_eq!(code(&["formula", "--id", "no.such.id", "--n", "4"]), 2);
    let list = stdout(&["formula", "--list"]);
    let rows: Vec<Vec<&str>> = list.lines().map(|l| l.split('\t').collect()).collect();
    assert!(rows.len() > 100);
    assert!(rows.iter().all(|r| r.len() == 4));
    assert!(rows
        .iter()
        .any(|r| r[0] == "thm4.1.kminus1" && r[1] == "per-k" && r[2] == "closed"));
    assert!(rows
        .iter()
        .any(|r| r[0].starts_with("prop5.5") && r[2] == "identity"));
    let v = json(&[
        "formula", "--id", "thm3.1.i", "--n", "4", "--k", "4", "--format", "json",
    ]);
    assert_eq!(v["terms"][0]["r"], 6);
}

#[test]
fn table_rows() {
    let text = stdout(&["table", "--which", "table1", "--n", "3"]);
    assert!(text.starts_with("1/2/3;1/23\n  k=1: 111\n  k=2: 112 121\n"));
    let v = json(&["table", "--which", "table2", "--n", "5", "--format", "json"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(code(&["table", "--which", "table1", "--n", "2"]), 2);
}

#[test]
fn verify_exit_codes_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let written = dir.path().join("findings.json");
    let text = stdout(&[
        "verify",
        "--n-max",
        "6",
        "--id",
        "thm7.1.*",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(text.lines().filter(|l| l.ends_with("CONFIRMED")).count(), 9);
    assert!(text.lines().last().unwrap().starts_with("cells: "));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["n_max"], 6);
    assert_eq!(v["summary"]["mismatch"], 0);

    stdout(&[
        "verify",
        "--n-max",
        "5",
        "--id",
        "thm4.1.*",
        "--write-findings",
        written.to_str().unwrap(),
    ]);
    let f: Value = serde_json::from_str(&fs::read_to_string(&written).unwrap()).unwrap();
    assert_eq!(f["ids"]["thm4.1.as-printed"]["status"], "MISMATCH");
    assert_eq!(f["ids"]["thm4.1.kminus1"]["status"], "CONFIRMED");
    assert_eq!(
        code(&[
            "verify",
            "--n-max",
            "5",
            "--id",
            "thm4.1.*",
            "--findings",
            written.to_str().unwrap()
        ]),
        0
    );

    let doctored = fs::read_to_string(&written)
        .unwrap()
        .replace("\"MISMATCH\"", "\"CONFIRMED\"")
        .replace("\"first_mismatch_n\": 3", "\"first_mismatch_n\": null");
    fs::write(&written, doctored).unwrap();
    let out = rgf(&[
        "verify",
        "--n-max",
        "5",
        "--id",
        "thm4.1.*",
        "--findings",
        written.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("thm4.1.as-printed"));

    assert_eq!(code(&["verify", "--n-max", "13"]), 2);
    assert_eq!(
        code(&[
            "verify",
            "--n-max",
            "5",
            "--findings",
            "/nonexistent/findings.json"
        ]),
        2
    );
}

#[test]
fn verify_matches_shipped_findings() {
    assert_eq!(code(&["verify", "--n-max", "9"]), 0);
}

#[test]
fn jobs_from_environment() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_rgf"))
            .args(["poly", "--n", "7", "--avoid", "123"])
            .env("RGF_JOBS", jobs)
            .output()
            .unwrap()
    };
    let one = run("1");
    let three = run("3");
    assert!(one.status.success());
    assert_eq!(one.stdout, three.stdout);
    assert_ne!(run("many").status.code(), Some(0));
}
