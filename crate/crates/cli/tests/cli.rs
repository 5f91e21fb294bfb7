use std::process::{Command, Output};

fn tricomm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricomm"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn main_family_matches_golden() {
    let out = tricomm(&["census"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/main_3_255.txt"));
}

#[test]
fn cycles_family_matches_golden() {
    let out = tricomm(&["census", "--family", "cycles", "--from", "3", "--to", "255"]);
    assert_eq!(stdout(&out), include_str!("golden/cycles_3_255.txt"));
}

#[test]
fn single_rows() {
    let out = tricomm(&["census", "--from", "3", "--to", "3", "--family", "cycles"]);
    assert_eq!(stdout(&out), "3 1 1 1.00000 3 3 3.00000\n");
    let out = tricomm(&["census", "--from", "4", "--to", "4", "--family", "main"]);
    assert_eq!(stdout(&out), "4 9 12 0.937500\n");
}

#[test]
fn csv_and_jsonl_carry_exact_fields() {
    let out = tricomm(&["census", "--from", "4", "--to", "5", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,a,b,partitions,p_a,proba_exact,proba");
    assert_eq!(lines[1], "4,9,12,5,3/4,15/16,0.937500");
    assert_eq!(lines.len(), 3);

    let out = tricomm(&[
        "census", "--from", "6", "--to", "6", "--family", "cycles", "--format", "jsonl",
    ]);
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["n"], 6);
    assert_eq!(row["a1"], "18");
    assert_eq!(row["b1"], "20");
    assert_eq!(row["proba1_exact"], "9/10");
    assert_eq!(row["proba1"], "0.900000");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["census", "--from", "5", "--to", "3"][..],
        &["census", "--from", "2", "--to", "3"],
        &["census", "--format", "xml"],
        &["verify", "--suites", "bogus"],
        &["verify", "--max-n", "8"],
        &["verify", "--max-n", "9", "--allow-n8"],
        &["frobnicate"],
    ] {
        assert_eq!(tricomm(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_formulas_small() {
    let out = tricomm(&["verify", "--suites", "formulas", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Formulas: pass"));
}

#[test]
fn verify_json_report() {
    let out = tricomm(&["verify", "--suites", "identities,characters", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    let suites = report["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    assert_eq!(suites[0]["suite"], "identities");
    let checked: u64 = suites[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["checked"].as_u64().unwrap())
        .sum();
    assert!(checked > 20_000);
}

#[test]
fn thread_flag_and_env_agree() {
    let a = tricomm(&[
        "--threads",
        "2",
        "census",
        "--to",
        "60",
        "--format",
        "jsonl",
    ]);
    let b = Command::new(env!("CARGO_BIN_EXE_tricomm"))
        .args(["census", "--to", "60", "--format", "jsonl"])
        .env("TRICOMM_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        tricomm(&["--threads", "0", "census"]).status.code(),
        Some(2)
    );
}
