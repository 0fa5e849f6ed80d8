use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin-braids"))
        .args(args)
        .output()
        .expect("spawn artin-braids")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_tmp(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn normalize_examples() {
    let out = bin(&["normalize", "--group", "bn", "--n", "3", "s1*s1^-1"]);
    assert_eq!(stdout(&out).trim(), "D^0");
    let out = bin(&["normalize", "--group", "fn", "--n", "2", "x1*x2*x2^-1"]);
    assert_eq!(stdout(&out).trim(), "x1");
    let out = bin(&["normalize", "--group", "bn", "--n", "3", "s1*s2*s1"]);
    assert_eq!(stdout(&out).trim(), "D^1");
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(
        bin(&["normalize", "--n", "3", "s1*q"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["normalize", "--n", "3", "s3"]).status.code(), Some(3));
    assert_eq!(
        bin(&["normalize", "--group", "fn", "--n", "2", "x3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        bin(&["rewrite-pure", "--n", "3", "s1"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
    let missing = bin(&[
        "verdict",
        "--cocycle",
        "/nonexistent/phi.json",
        "--family",
        "bn",
    ]);
    assert_eq!(missing.status.code(), Some(4));
}

#[test]
fn word_commands() {
    assert_eq!(
        stdout(&bin(&["equal", "--n", "3", "s1*s2*s1", "s2*s1*s2"])).trim(),
        "true"
    );
    assert_eq!(
        stdout(&bin(&["equal", "--n", "3", "s1*s2", "s2*s1"])).trim(),
        "false"
    );
    assert_eq!(
        stdout(&bin(&["act", "--n", "2", "s1", "x2"])).trim(),
        "x2^-1*x1*x2"
    );
    assert_eq!(
        stdout(&bin(&["rewrite-pure", "--n", "2", "s1^2"])).trim(),
        "a(1,2)"
    );
    let out = bin(&["rewrite-pure", "--n", "3", "s1*s2^2*s1^-1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("a("));
}

#[test]
fn build_then_verdict() {
    let out = bin(&["cocycle-build", "--n", "2", "--mu1", "th1"]);
    assert!(out.status.success());
    let path = write_tmp("theta.json", &stdout(&out));
    let verdict = stdout(&bin(&[
        "verdict",
        "--cocycle",
        path.to_str().unwrap(),
        "--family",
        "bn",
    ]));
    assert!(
        verdict.starts_with(r#"{"verdict":"SimpleAndUniqueTrace","by":"Theorem AB""#),
        "{verdict}"
    );

    let out = bin(&["cocycle-build", "--n", "3", "--mu1", "0"]);
    let path = write_tmp("zero.json", &stdout(&out));
    let verdict = stdout(&bin(&[
        "verdict",
        "--cocycle",
        path.to_str().unwrap(),
        "--family",
        "bn",
    ]));
    assert!(
        verdict.starts_with(r#"{"verdict":"NotFactor""#),
        "{verdict}"
    );
}

#[test]
fn pure_file_is_indeterminate() {
    let path = write_tmp(
        "pure3.json",
        r#"{"n":3,"entries":[["a(1,2)","x1","th1"],["a(1,3)","x1","-th1"],["a(2,3)","x2","1/2"]]}"#,
    );
    let out = bin(&[
        "verdict",
        "--cocycle",
        path.to_str().unwrap(),
        "--family",
        "pn",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "Indeterminate");
    assert_eq!(v["kleppner"], true);
    assert_eq!(v["relative_kleppner"], false);
}

#[test]
fn mackey_requires_omega() {
    let path = write_tmp("pure2.json", r#"{"n":2,"entries":[["a(1,2)","x1","1/3"]]}"#);
    let out = bin(&[
        "verdict",
        "--cocycle",
        path.to_str().unwrap(),
        "--family",
        "mackey",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let path = write_tmp(
        "pure2_omega.json",
        r#"{"n":2,"entries":[["a(1,2)","x1","th1"]],"omega":[["a(1,2)","z","1/3"]]}"#,
    );
    let out = bin(&[
        "verdict",
        "--cocycle",
        path.to_str().unwrap(),
        "--family",
        "mackey",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(r#""verdict":"SimpleAndUniqueTrace""#));
}

#[test]
fn invalid_table_is_rejected() {
    let path = write_tmp(
        "bad.json",
        r#"{"n":3,"entries":[["s1","x1","0"],["s1","x2","0"],["s1","x3","1/2"],
                             ["s2","x1","1/3"],["s2","x2","0"],["s2","x3","0"]]}"#,
    );
    assert_eq!(
        bin(&[
            "verdict",
            "--cocycle",
            path.to_str().unwrap(),
            "--family",
            "bn"
        ])
        .status
        .code(),
        Some(2)
    );
    let out = bin(&["cocycle-classify", "--cocycle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn classify_and_similarity() {
    let a = write_tmp(
        "p1.json",
        r#"{"n":2,"entries":[["s1","x1","1/8"],["s1","x2","1/8"]]}"#,
    );
    let b = write_tmp(
        "p2.json",
        r#"{"n":2,"entries":[["s1","x1","0"],["s1","x2","1/4"]]}"#,
    );
    let out = bin(&[
        "cocycle-classify",
        "--cocycle",
        a.to_str().unwrap(),
        "--against",
        b.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["similar"], true);
    assert_eq!(v["witness"], serde_json::json!(["0", "1/8"]));
    assert_eq!(v["mu1"], "1/4");
}

#[test]
fn cohomology_command() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&bin(&[
        "cohomology",
        "--group",
        "pn-h2",
        "--n",
        "4",
    ])))
    .unwrap();
    assert_eq!(v["torus_exponent"], 11);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "braid", "--max-n", "5"][..],
        &["verify", "--suite", "infinite", "--max-n", "6"][..],
    ] {
        let out = bin(args);
        assert!(out.status.success(), "{}", stdout(&out));
    }
}

#[test]
fn verify_is_byte_identical_for_a_seed() {
    let a = bin(&["verify", "--suite", "cocycle", "--seed", "7"]);
    let b = bin(&["verify", "--suite", "cocycle", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn report_matches_schema() {
    let schema: serde_json::Value = serde_json::from_str(artin_braids_cli::REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for args in [
        &["verify", "--suite", "all", "--max-n", "4", "--seed", "3"][..],
        &["verify", "--suite", "braid", "--max-n", "3", "--timings"][..],
    ] {
        let report: serde_json::Value = serde_json::from_slice(&bin(args).stdout).unwrap();
        assert!(validator.is_valid(&report), "{report}");
        let ids: Vec<&str> = report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["id"].as_str().unwrap())
            .collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
    let printed: serde_json::Value = serde_json::from_slice(&bin(&["schema"]).stdout).unwrap();
    assert_eq!(printed, schema);
}
