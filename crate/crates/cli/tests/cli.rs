use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn protocol(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../protocols")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn credence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_credence"))
        .args(args)
        .env_remove("CREDENCE_SEED")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = credence(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn protocol_files_drive_every_engine() {
    let one = protocol("one_week_fair.json");
    let v = json(&["exact", "--protocol", &one, "--rule", "lewis", "--format", "json"]);
    assert_eq!(v["total"], "1/2");
    assert_eq!(v["total_decimal"], "0.500000000000");

    let v = json(&["simulate", "--protocol", &one, "--trials", "5000", "--format", "json"]);
    assert_eq!(v["stats"]["trials"], 5000);

    let q = protocol("quantum_fair.json");
    let v = json(&["branch", "--protocol", &q, "--format", "json"]);
    assert!((v["h_credence"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-12);

    let fixed = protocol("fixed_7827.json");
    let v = json(&["fixed", "--protocol", &fixed, "--format", "json"]);
    assert_eq!(v["credence"], "1/3");
}

#[test]
fn inline_flags_conflict_with_protocol_file() {
    let one = protocol("one_week_fair.json");
    let out = credence(&["exact", "--protocol", &one, "--weeks", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_protocol_file_reports_field_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"weeks":1,"awakenings":{"H":1,"T":2},"coin":{"type":"quantum","ampH":[0.6,0],"ampT":[0.9,0]},"mode":{"type":"sequential"}}"#,
    )
    .unwrap();
    let out = credence(&["exact", "--protocol", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("`coin`") && err.contains("not normalized"), "{err}");
}

#[test]
fn engine_errors_exit_one() {
    let out = credence(&["simulate", "--pH", "1", "--awake-h", "0", "--awake-t", "3", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no awakenings"));
}

#[test]
fn seed_env_var_sets_the_default_seed() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_credence"));
        cmd.args(["simulate", "--trials", "2000", "--format", "csv"]).args(extra);
        cmd.env_remove("CREDENCE_SEED");
        if let Some(s) = env {
            cmd.env("CREDENCE_SEED", s);
        }
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("77"), &[]), run(None, &["--seed", "77"]));
    assert_ne!(run(Some("77"), &[]), run(None, &[]));
}

#[test]
fn compare_single_long_trial() {
    let v = json(&["compare", "--weeks", "5218", "--trials", "1", "--seed", "5", "--format", "json"]);
    let r = &v["report"];
    assert_eq!(r["se_method"], "week-bootstrap");
    assert_eq!(r["fixed"]["n_h"], 2609);
    assert_eq!(r["fixed"]["n_t"], 5218);
    assert_eq!(r["pass"], true);
}
