use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn ghilb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghilb")).args(args).output().expect("binary runs")
}

fn ghilb_with_budget(args: &[&str], budget: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghilb")).args(args).env("GHILB_BUDGET", budget).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(command: &[&str], input: &str, file: &str, series: &str) {
    let input = data(input);
    let gold = data(&format!("golden/{file}"));
    let mut args = command.to_vec();
    args.extend(["--input", input.to_str().unwrap(), "--golden", gold.to_str().unwrap()]);
    let out = ghilb(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains(&format!("series: {series}\n")));
}

#[test]
fn golden_example_a_series() {
    golden(&["series"], "example_a.json", "example_a_series.txt", "(z+z^2+z^3+z^4)/(1-z)^6");
}

#[test]
fn golden_example_b_series() {
    golden(&["series"], "example_b.json", "example_b_series.txt", "(4z+z^2+6z^3-3z^4)/(1-z)^5");
}

#[test]
fn golden_example_a_residual() {
    golden(&["residual"], "example_a.json", "example_a_residual.txt", "(3+z)/(1-z)^2");
}

#[test]
fn golden_example_b_two_sections() {
    golden(&["section", "--sections", "2"], "example_b.json", "example_b_section2.txt", "(4z+4z^2)/(1-z)^3");
}

#[test]
fn golden_mismatch_fails() {
    let input = data("embedded_line.json");
    let gold = data("golden/example_a_series.txt");
    let out = ghilb(&["series", "--input", input.to_str().unwrap(), "--golden", gold.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_report_for_example_b() {
    let input = data("example_b.json");
    let out = ghilb(&["jmult", "--input", input.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["jCoeffs"], serde_json::json!([8, 12, 1, -6, -3]));
    assert_eq!(v["values"]["jMultiplicity"], 8);
    assert_eq!(v["series"]["numerator"], serde_json::json!([0, 4, 1, 6, -3]));
    assert_eq!(v["series"]["denomExponent"], 5);
    assert!(v.get("timings").is_none());
}

#[test]
fn json_output_is_deterministic() {
    let input = data("embedded_line.json");
    let args = ["residual", "--input", input.to_str().unwrap(), "--format", "json", "--seed", "4", "--seed", "9"];
    let a = ghilb(&args);
    let b = ghilb(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timings_only_on_request() {
    let input = data("embedded_line.json");
    let out = ghilb(&["series", "--input", input.to_str().unwrap(), "--timings"]);
    assert!(stdout(&out).contains("time series: "));
}

#[test]
fn invariance_on_embedded_line() {
    let input = data("embedded_line.json");
    let out = ghilb(&["verify-invariance", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).matches(": PASS").count(), 6);
}

#[test]
fn small_checks_pass() {
    let input = data("embedded_line.json");
    let path = input.to_str().unwrap();
    for cmd in ["singh-check", "verify-prop24", "bigraded-fit", "thm34-probe", "spread", "reduction"] {
        let out = ghilb(&[cmd, "--input", path]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["x^2+y"]}}"#).unwrap();
    let out = ghilb(&["series", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not homogeneous"));

    std::fs::write(&bad, r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["x^2+*y"]}}"#).unwrap();
    let out = ghilb(&["series", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 4"));

    let input = data("embedded_line.json");
    let path = input.to_str().unwrap();
    assert_eq!(ghilb(&["series", "--input", path, "--t-max", "2"]).status.code(), Some(2));
    assert_eq!(ghilb(&["nonsense", "--input", path]).status.code(), Some(3));

    let b = data("example_b.json");
    assert_eq!(ghilb_with_budget(&["series", "--input", b.to_str().unwrap()], "10").status.code(), Some(2));
    assert_eq!(ghilb_with_budget(&["series", "--input", path], "lots").status.code(), Some(3));
}
