//! End-to-end checks of the command-line interface: exit codes, JSON
//! output stability, and certificate round-trips through the verify
//! subcommand.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn polycert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("polycert-cli-{}-{name}", std::process::id()));
    let mut file = std::fs::File::create(&path).expect("temp file");
    file.write_all(contents.as_bytes()).expect("write");
    path
}

const QUINTIC_JSON: &str = concat!(
    r#"{"poly":["1","0","1","2","3","10"],"condition":"II","k":null,"#,
    r#""negated":false,"witness":{"type":"prime_value","m":"2","value":"389"},"#,
    r#""primality_method":"trial_division","power_extension":null,"version":1}"#,
);

#[test]
fn certify_emits_stable_json() {
    let output = polycert(&[
        "certify",
        "--expr",
        "10x^5+3x^4+2x^3+x^2+1",
        "--bound",
        "10",
        "--json",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), format!("{QUINTIC_JSON}\n"));
}

#[test]
fn coeffs_and_expr_forms_agree_byte_for_byte() {
    let by_expr = polycert(&[
        "certify",
        "--expr",
        "10x^5+3x^4+2x^3+x^2+1",
        "--bound",
        "10",
        "--json",
    ]);
    let by_coeffs = polycert(&[
        "certify",
        "--coeffs",
        "1,0,1,2,3,10",
        "--bound",
        "10",
        "--json",
    ]);
    assert_eq!(exit_code(&by_expr), 0);
    assert_eq!(exit_code(&by_coeffs), 0);
    assert_eq!(by_expr.stdout, by_coeffs.stdout);
}

#[test]
fn uncertifiable_input_exits_one_with_reason() {
    let output = polycert(&["certify", "--coeffs", "2,3,1"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr_of(&output).contains("NoCondition"), "{output:?}");
}

#[test]
fn no_witness_within_bound_exits_one() {
    let output = polycert(&["certify", "--coeffs", "5,7,9", "--bound", "2"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr_of(&output).contains("NoWitnessFound"), "{output:?}");
}

#[test]
fn degenerate_and_malformed_inputs_exit_two() {
    assert_eq!(exit_code(&polycert(&["certify", "--expr", "x - x"])), 2);
    assert_eq!(exit_code(&polycert(&["certify", "--expr", "3x^2 + $"])), 2);
    assert_eq!(exit_code(&polycert(&["certify", "--coeffs", "1,two"])), 2);
    assert_eq!(exit_code(&polycert(&["certify"])), 2);
    // clap usage errors also map to 2
    assert_eq!(exit_code(&polycert(&["certify", "--nope"])), 2);
    assert_eq!(
        exit_code(&polycert(&[
            "certify",
            "--expr",
            "x+1",
            "--coeffs",
            "1,1"
        ])),
        2
    );
}

#[test]
fn factor_reports_factors_and_exits_zero() {
    let output = polycert(&["factor", "--coeffs", "-1,0,1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("reducible"), "{text}");
    assert!(text.contains("(x-1) * (x+1)") || text.contains("(x+1) * (x-1)"), "{text}");

    let output = polycert(&["factor", "--coeffs", "1,0,1", "--json"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains(r#""verdict":"irreducible""#));
}

#[test]
fn factor_budget_exhaustion_exits_three() {
    let output = polycert(&["factor", "--coeffs", "1,0,1,2,3,10", "--budget", "2"]);
    assert_eq!(exit_code(&output), 3);
}

#[test]
fn verify_accepts_fresh_certificates_and_rejects_tampered_ones() {
    let path = temp_file("verify-good.json", &format!("{QUINTIC_JSON}\n"));
    let output = polycert(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("valid"));

    let tampered = QUINTIC_JSON.replace(r#""m":"2""#, r#""m":"3""#);
    let path = temp_file("verify-tampered.json", &tampered);
    let output = polycert(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout_of(&output).contains("INVALID"));

    let path = temp_file("verify-garbage.json", "not a certificate\n");
    assert_eq!(exit_code(&polycert(&["verify", path.to_str().unwrap()])), 2);
    assert_eq!(exit_code(&polycert(&["verify", "/nonexistent/file.json"])), 2);
}

#[test]
fn power_flag_emits_extension_certificates() {
    // 25x + 1: first witness is f(4) = 101, and 4 = 2^2, so one power
    // certificate follows the base one.
    let output = polycert(&["certify", "--coeffs", "1,25", "--power", "--json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "{text}");
    assert!(lines[0].contains(r#""power_extension":null"#));
    assert!(lines[1].contains(r#""power_extension":{"r":2,"s":"2","sign":1}"#));

    // Both lines re-verify from a file.
    let path = temp_file("power-certs.json", &text);
    assert_eq!(exit_code(&polycert(&["verify", path.to_str().unwrap()])), 0);

    // A witness that is not a perfect power yields just the base line.
    let output = polycert(&["certify", "--coeffs", "1,1,6", "--power", "--json"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output).lines().count(), 1);
}

#[test]
fn roots_subcommand_reports_convergence() {
    let output = polycert(&["roots", "--coeffs", "2,3", "--json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains(r#""converged":true"#), "{text}");

    let output = polycert(&["roots", "--coeffs", "1,1,2,3", "--tol", "1e-9", "--json"]);
    assert_eq!(exit_code(&output), 0);

    assert_eq!(exit_code(&polycert(&["roots", "--coeffs", "7"])), 2);
    assert_eq!(exit_code(&polycert(&["roots", "--coeffs", "1,1", "--tol", "-1"])), 2);
}

#[test]
fn verify_reads_certificates_from_stdin() {
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_polycert"))
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(format!("{QUINTIC_JSON}\n").as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(exit_code(&output), 0, "{output:?}");
}

#[test]
fn check_conditions_reflects_the_report() {
    let output = polycert(&["check-conditions", "--coeffs", "1,0,1,2,3,10", "--json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains(r#""condition_i":false"#), "{text}");
    assert!(text.contains(r#""condition_ii":true"#), "{text}");

    let output = polycert(&["check-conditions", "--coeffs", "1,1,2,3"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("jump indices [2]"));

    assert_eq!(exit_code(&polycert(&["check-conditions", "--coeffs", "2,3,1"])), 1);
}

#[test]
fn human_output_names_the_witness() {
    let output = polycert(&["certify", "--expr", "3x^2+2x+1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("leading coefficient 3 is prime"), "{text}");
    assert!(text.contains("condition: I"), "{text}");
}
