use assert_cmd::Command;
use serde_json::Value;

fn classinv() -> Command {
    Command::cargo_bin("classinv").unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = classinv().args(args).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn series_with_golden_match() {
    let out = classinv()
        .args(["series", "--group", "sp", "--n", "2", "--spec", "S3(V)", "--maxdeg", "8", "--golden", "5.4,SP,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("golden 5.4/sp/2: MATCH"));
    let v = json_of(&[
        "series", "--group", "so", "--n", "2", "--spec", "S4(V)", "--maxdeg", "10", "--golden", "5.5/so/2", "--format",
        "json",
    ]);
    assert_eq!(v["golden"]["verdict"], "MATCH");
    assert_eq!(v["coeffs"][3], 5);
}

#[test]
fn empty_spec_is_trivial() {
    let v = json_of(&["series", "--group", "sp", "--n", "2", "--spec", "", "--maxdeg", "3", "--format", "json"]);
    assert_eq!(v["coeffs"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn mismatch_exits_two() {
    let out = classinv()
        .args(["series", "--group", "so", "--n", "2", "--spec", "S4(V)", "--maxdeg", "6", "--golden", "5.4/so/2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("MISMATCH"));
}

#[test]
fn usage_errors_exit_three() {
    let cases: &[&[&str]] = &[
        &["series", "--group", "sp", "--n", "2", "--spec", "L3(V)", "--maxdeg", "3"],
        &["series", "--group", "sp", "--n", "3", "--spec", "V", "--maxdeg", "3"],
        &["series", "--group", "sp", "--n", "2", "--spec", "V", "--maxdeg", "40"],
        &["series", "--group", "o", "--n", "3", "--spec", "V", "--maxdeg", "3", "--oracle", "weyl"],
        &["series", "--group", "o", "--n", "3", "--spec", "V", "--maxdeg", "3", "--oracle", "branching"],
        &["series", "--group", "gl", "--n", "3", "--maxdeg", "3"],
        &["series", "--group", "so", "--n", "3"],
        &["golden", "--golden", "9.9/so/3"],
    ];
    for args in cases {
        classinv().args(*args).assert().code(3);
    }
}

#[test]
fn oracle_runs() {
    for oracle in ["weyl", "branching"] {
        let v = json_of(&[
            "series", "--group", "so", "--n", "4", "--spec", "V + L2(V)", "--maxdeg", "5", "--oracle", oracle, "--format",
            "json",
        ]);
        assert_eq!(v["oracle"]["verdict"], "MATCH", "{oracle}");
        assert_eq!(v["oracle"]["label"], oracle);
    }
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["series", "--group", "sp", "--n", "4", "--spec", "2*[2,1] + V", "--maxdeg", "6", "--format", "json"];
    let a = classinv().args(args).output().unwrap().stdout;
    let b = classinv().args(args).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn exterior_subcommand() {
    let v = json_of(&["exterior", "--kind", "alt2", "--group", "so", "--n", "4", "--format", "json"]);
    assert_eq!(v["kind"], "alt2");
    assert_eq!(v["n"], 4);
    // (1 + t^3)^2
    assert_eq!(v["coeffs"], serde_json::json!([1, 0, 0, 2, 0, 0, 1]));
    assert_eq!(v["generator_degrees"], serde_json::json!([3, 3]));
    classinv().args(["exterior", "--kind", "sym2", "--group", "sp", "--n", "2"]).assert().success();
}

#[test]
fn branch_and_lr() {
    let v = json_of(&["branch", "--group", "sp", "--n", "4", "--lambda", "[1,1]", "--format", "json"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    classinv()
        .args(["lr", "--lambda", "[3,2,1]", "--mu", "[2,1]", "--nu", "[2,1]"])
        .assert()
        .success()
        .stdout("2\n");
}

#[test]
fn golden_single_entry() {
    let v = json_of(&["golden", "--golden", "5.6/so/3", "--format", "json"]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["verdict"], "MATCH");
    assert_eq!(entries[0]["maxdeg"], 14);
}
