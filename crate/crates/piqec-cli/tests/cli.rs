//! End-to-end checks of the command-line surface via the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_piqec"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("piqec-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn catalog_list_has_all_entries() {
    let out = run(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in [
        "rep3",
        "rep5",
        "phase5",
        "code7_plus",
        "code7_minus",
        "ruskai9_plus",
        "ruskai9_minus",
        "nine_a6zero",
        "nine_a0zero",
    ] {
        assert!(text.contains(id), "missing {id} in listing");
    }
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn catalog_validate_passes() {
    let out = run(&["catalog", "validate"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verdict: PASS"));
    assert!(!text.contains(" FAIL "));
}

#[test]
fn export_then_verify_round_trip() {
    let path = tmp_path("code7m.json");
    let out = run(&[
        "catalog",
        "export",
        "code7_minus",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    // exported normalized coefficients match the closed form to 1e-12
    let text = std::fs::read_to_string(&path).unwrap();
    let file: serde_json::Value = serde_json::from_str(&text).unwrap();
    let coeffs = file["coefficients"].as_array().unwrap();
    let parsed: Vec<f64> = coeffs
        .iter()
        .map(|c| c["re"].as_str().unwrap().parse::<f64>().unwrap())
        .collect();
    let norm2: f64 = parsed
        .iter()
        .zip([1.0, 21.0, 35.0, 7.0])
        .map(|(a, w)| a * a * w)
        .sum();
    let scale = norm2.sqrt();
    // normalized against weight multiplicities: a_k sqrt(C(7,k)) / |c0|
    let normalized: Vec<f64> = parsed
        .iter()
        .zip([1.0f64, 21.0, 35.0, 7.0])
        .map(|(a, w)| a * w.sqrt() / scale)
        .collect();
    let want = [
        -(15f64.sqrt()) / 8.0,
        -(7f64.sqrt()) / 8.0,
        -(21f64.sqrt()) / 8.0,
        21f64.sqrt() / 8.0,
    ];
    for (got, want) in normalized.iter().zip(want) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    let out = run(&["verify", path.to_str().unwrap(), "--errors", "onebit"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdicts agree"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn verify_failure_sets_exit_code() {
    let path = tmp_path("r9.json");
    let out = run(&[
        "catalog",
        "export",
        "ruskai9_plus",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", path.to_str().unwrap(), "--errors", "z-doubles"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("verdict: FAIL"));
    assert!(text.contains("violations"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn verify_rep5_same_type_doubles() {
    let path = tmp_path("rep5.json");
    assert!(run(&["catalog", "export", "rep5", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = run(&[
        "verify",
        path.to_str().unwrap(),
        "--errors",
        "same-type-doubles",
    ]);
    assert!(out.status.success());
    let out = run(&[
        "verify",
        path.to_str().unwrap(),
        "--errors",
        "custom:I,X1,X2,X3,X4,X5",
    ]);
    assert!(out.status.success());
    let _ = std::fs::remove_file(&path);
}

#[test]
fn decompose_emits_table() {
    let out = run(&["decompose", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("W_3 = 1[7,0] + 6[6,1] + 14[5,2] + 14[4,3]"));
    assert!(text.contains("1[7,0] x8"));
    let out = run(&["decompose", "5", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total-spin spectrum matches irrep dimensions"));
}

#[test]
fn nogo_modes_supported() {
    for mode in ["full", "drop-imxy", "drop-y"] {
        let out = run(&["nogo", "--mode", mode, "--samples", "500", "--grid", "40x41"]);
        assert!(out.status.success(), "mode {mode}");
        let text = stdout(&out);
        assert!(text.contains("SUPPORTED"), "mode {mode}");
        assert!(text.contains("verdict: PASS"));
    }
}

#[test]
fn search9_t_range_reports_solutions_and_gaps() {
    let out = run(&[
        "search9",
        "--t-start",
        "0.05",
        "--t-end",
        "0.15",
        "--t-step",
        "0.05",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("oracle PASS"));
    // outside the solvable window the row is informational, not failing
    let out = run(&[
        "search9",
        "--t-start",
        "0.38",
        "--t-end",
        "0.39",
        "--t-step",
        "0.01",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no positive quadratic root"));
}

#[test]
fn search9_grid_mode_reports_family_properties() {
    let out = run(&[
        "search9", "--grid", "12x13", "--x-lo", "0.05", "--x-hi", "20", "--y-max", "5",
        "--branch", "+",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("row conditions solved on the whole grid"));
    assert!(text.contains("no grid point solves the full nine-condition system"));
    // emits plottable x y residual rows before the report
    let data_rows = text
        .lines()
        .filter(|l| l.split_whitespace().count() == 3 && l.contains('e'))
        .count();
    assert!(data_rows >= 12 * 13, "expected tabular rows, got {data_rows}");
}

#[test]
fn nogo_writes_scan_table() {
    let path = tmp_path("scan.dat");
    let out = run(&[
        "nogo",
        "--mode",
        "drop-imxy",
        "--grid",
        "20x21",
        "--table",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table = std::fs::read_to_string(&path).unwrap();
    assert_eq!(table.lines().count(), 20 * 21);
    for line in table.lines().take(3) {
        assert_eq!(line.split_whitespace().count(), 3);
    }
    let _ = std::fs::remove_file(&path);
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["nogo", "--mode", "drop-imxy", "--grid", "30x31"]);
    let b = run(&["nogo", "--mode", "drop-imxy", "--grid", "30x31"]);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run(&["catalog", "list", "--format", "structured"]);
    let b = run(&["catalog", "list", "--format", "structured"]);
    assert_eq!(stdout(&a), stdout(&b));
    // structured output parses as JSON
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["verdict"], "PASS");
}
