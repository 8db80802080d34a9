//! Integration tests for the `neighborly` binary: round trips, exit codes
//! and stream behavior.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_neighborly"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn neighborly");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("neighborly-cli-{}-{name}", std::process::id()))
}

#[test]
fn cyclic_defaults_to_increasing_integer_params() {
    let output = run(&["cyclic", "4", "6"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.starts_with("6 5\n"));
    assert!(text.contains("1 5 25 125 625"));
    assert!(text.ends_with('\n'));
}

#[test]
fn chirotope_round_trip_through_text() {
    let config = stdout_of(&run(&["cyclic", "4", "6"]));
    let chirotope = run_with_stdin(&["chirotope"], &config);
    assert!(chirotope.status.success());
    let text = stdout_of(&chirotope);
    assert_eq!(text, "5 6\n++++++\n");
    // Re-parse through dual twice: canonicalized identity.
    let dual = run_with_stdin(&["dual"], &text);
    let dual_dual = run_with_stdin(&["dual"], &stdout_of(&dual));
    assert_eq!(stdout_of(&dual_dual), text);
}

#[test]
fn verify_exit_codes() {
    let ok = run_with_stdin(
        &["verify", "--neighborly", "--uniform", "--gp", "--acyclic"],
        "5 6\n++++++\n",
    );
    assert_eq!(ok.status.code(), Some(0));

    // A single interior point: acyclicity fails with a witness.
    let square_plus_center = "5 3\n1 0 0\n1 2 0\n1 2 2\n1 0 2\n1 1 1\n";
    let chirotope = run_with_stdin(&["chirotope"], square_plus_center);
    let bad = run_with_stdin(&["verify", "--acyclic"], &stdout_of(&chirotope));
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout_of(&bad).contains("element 5"));

    let usage = run(&["verify"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn extend_certifies_and_echoes_epsilon() {
    let config = stdout_of(&run(&["cyclic", "2", "6"]));
    let output = run_with_stdin(&["extend", "--prog", "4+,1-,6+"], &config);
    assert!(output.status.success());
    let stderr = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(stderr.starts_with("epsilon "), "stderr was: {stderr}");
    let text = stdout_of(&output);
    assert!(text.starts_with("7 3\n"));
}

#[test]
fn pipeline_log_replays_byte_identically() {
    let log_path = temp_path("pipe.log");
    let chi_path = temp_path("pipe.chi");
    let status = bin()
        .args([
            "pipeline",
            "--polygon",
            "6",
            "--steps",
            "1",
            "--log",
            log_path.to_str().unwrap(),
            "--out",
            chi_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let replayed = run(&["replay", "--in", log_path.to_str().unwrap()]);
    assert!(replayed.status.success());
    assert_eq!(
        stdout_of(&replayed),
        std::fs::read_to_string(&chi_path).unwrap()
    );
    let _ = std::fs::remove_file(log_path);
    let _ = std::fs::remove_file(chi_path);
}

#[test]
fn complete_not_found_exits_one() {
    let config = stdout_of(&run(&["cyclic", "2", "4"]));
    let output = run_with_stdin(&["complete", "--budget", "2"], &config);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn complete_succeeds_within_default_budget() {
    let config = stdout_of(&run(&["cyclic", "2", "4"]));
    let output = run_with_stdin(&["complete"], &config);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout_of(&output).starts_with("3 8\n"));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let output = run_with_stdin(&["chirotope"], "2 2\n1 2\n1 x\n");
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 3"), "stderr was: {stderr}");
}

#[test]
fn unknown_subcommand_exits_two() {
    let output = run(&["bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn galesew_dual_pipeline_is_neighborly() {
    let config = stdout_of(&run(&["cyclic", "2", "6"]));
    let chirotope = stdout_of(&run_with_stdin(&["chirotope"], &config));
    let dual = stdout_of(&run_with_stdin(&["dual"], &chirotope));
    let sewn = stdout_of(&run_with_stdin(&["galesew"], &dual));
    let polytope = stdout_of(&run_with_stdin(&["dual"], &sewn));
    let verify = run_with_stdin(&["verify", "--neighborly"], &polytope);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn probe_reports_full_preservation() {
    let config = stdout_of(&run(&["cyclic", "4", "6"]));
    let output = run_with_stdin(&["probe", "--trials", "10"], &config);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("trials 10"));
    assert!(text.contains("preserved 10"));
}

#[test]
fn sew_picks_first_universal_flag_when_unspecified() {
    let config = stdout_of(&run(&["cyclic", "4", "6"]));
    let output = run_with_stdin(&["sew"], &config);
    assert!(output.status.success());
    assert!(stdout_of(&output).starts_with("7 5\n"));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("flag "));
    assert!(stderr.contains("epsilon "));
}

#[test]
fn fiber_reports_dimension_and_witness() {
    let config = stdout_of(&run(&["cyclic", "2", "6"]));
    let output = run_with_stdin(&["fiber", "--prog", "1+,4-"], &config);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.starts_with("dimension 2\n"));
    assert!(text.contains("witness "));
    assert!(text.contains("INEQ "));
}
