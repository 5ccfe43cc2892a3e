//! End-to-end tests of the `chiclass` binary: output grammar, exit codes,
//! determinism and the json round-trip contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chiclass"))
}

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_file(command: &str, file: &Path, extra: &[&str]) -> Output {
    let mut args = vec![command, "--input", file.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn virtual_k3_table() {
    let out = run_file("virtual", &examples().join("virtual-k3.json"), &[]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("degree-0 part: 2 - 20y + 2y^2"), "{text}");
    assert!(text.contains("route agreement (Lambda_y/Todd vs Q_y): exact"));
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn spectrum_node_line() {
    let out = run_file("spectrum", &examples().join("spectrum-node.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("spectrum: {3/2}, mu: 1, chi_y: -y"));
}

#[test]
fn milnor_nodal_cubic_passes() {
    let out = run_file("milnor", &examples().join("milnor-nodal-cubic.json"), &[]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("M_y (degree 0) = -y"));
    assert!(text.contains("residual (virtual - actual - Milnor): 0"));
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn milnor_with_wrong_chi_fails_with_exit_1() {
    let dir = std::env::temp_dir();
    let file = dir.join("chiclass-test-wrong-chi.json");
    std::fs::write(
        &file,
        r#"{"ambient":3,"degrees":[3],
            "sings":[{"weights":["1/2","1/2","1/2"]}],
            "chi_y_of_x":{"coeffs":["1","-5","1"]}}"#,
    )
    .unwrap();
    let out = run_file("milnor", &file, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: FAIL"));
}

#[test]
fn nearby_resolution_and_log_pair() {
    let out = run_file("nearby", &examples().join("nearby-node.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("psi genus = 1 - y"));
    assert!(text.contains("phi genus on sigma = -y"));
    assert!(text.contains("m_I = 2"));

    let out = run_file("nearby", &examples().join("nearby-logpair.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degree-0 part: y + y^2"));

    let out = run_file("nearby", &examples().join("nearby-inclexcl.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("inclusion-exclusion genus = -y"));
}

#[test]
fn chi_y_oracle_output() {
    let out = run_file("chi-y", &examples().join("chi-y-quintic.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chi(Omega^1) = 100"));
    assert!(text.contains("chi_y = 100y - 100y^2"));
    assert!(text.contains("Euler characteristic): -200"));
}

#[test]
fn verify_prop14_passes() {
    let out = run_file("verify", &examples().join("verify-prop14.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS (all 24 cases exact)"), "{text}");
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn schema_violation_exits_2_and_names_the_field() {
    let dir = std::env::temp_dir();
    let file = dir.join("chiclass-test-bad-field.json");
    std::fs::write(&file, r#"{"ambient": 3, "degres": [4]}"#).unwrap();
    let out = run_file("virtual", &file, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("degres"));

    let file2 = dir.join("chiclass-test-cmd-mismatch.json");
    std::fs::write(&file2, r#"{"command": "spectrum", "weights": ["1/2"]}"#).unwrap();
    let out = run_file("virtual", &file2, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("command"));
}

#[test]
fn unknown_check_exits_2_listing_names() {
    let dir = std::env::temp_dir();
    let file = dir.join("chiclass-test-unknown-check.json");
    std::fs::write(&file, r#"{"check": "everything"}"#).unwrap();
    let out = run_file("verify", &file, &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("unknown check"));
    assert!(err.contains("prop14"));
}

#[test]
fn max_dim_env_cap() {
    let out = bin()
        .args([
            "chi-y",
            "--input",
            examples().join("chi-y-quintic.json").to_str().unwrap(),
        ])
        .env("CHICLASS_MAX_DIM", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("CHICLASS_MAX_DIM"));
}

#[test]
fn deterministic_reports() {
    let file = examples().join("virtual-k3.json");
    let a = run_file("virtual", &file, &["--format", "json"]);
    let b = run_file("virtual", &file, &["--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run_file("virtual", &file, &["--format", "table"]);
    let b = run_file("virtual", &file, &["--format", "table"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_input_echo_round_trips() {
    let file = examples().join("milnor-nodal-cubic.json");
    let first = run_file("milnor", &file, &["--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let echoed = doc.get("input").unwrap();

    // feed the echoed payload back in as a job file
    let dir = std::env::temp_dir();
    let replay = dir.join("chiclass-test-roundtrip.json");
    std::fs::write(&replay, serde_json::to_string(echoed).unwrap()).unwrap();
    let second = run_file("milnor", &replay, &["--format", "json"]);
    assert_eq!(second.status.code(), Some(0));
    let doc2: serde_json::Value = serde_json::from_slice(&second.stdout).unwrap();

    // byte-identical echo and identical result
    assert_eq!(
        serde_json::to_string(echoed).unwrap(),
        serde_json::to_string(doc2.get("input").unwrap()).unwrap()
    );
    assert_eq!(doc.get("result"), doc2.get("result"));
}

#[test]
fn format_field_in_file_is_honored_and_flag_overrides() {
    let dir = std::env::temp_dir();
    let file = dir.join("chiclass-test-format.json");
    std::fs::write(
        &file,
        r#"{"command": "spectrum", "format": "json", "weights": ["1/3"]}"#,
    )
    .unwrap();
    let out = run_file("spectrum", &file, &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_start().starts_with('{'));

    let out = run_file("spectrum", &file, &["--format", "table"]);
    assert!(stdout(&out).contains("spectrum: {1/3, 2/3}, mu: 2, chi_y: 2"));
}
