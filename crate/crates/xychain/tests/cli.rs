//! End-to-end checks of the `xychain` binary: output files, determinism,
//! and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn xychain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xychain"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn sweep_args<'a>(out: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut args = vec![
        "sweep", "--gamma", "0,0.5", "--b-min", "-1", "--b-max", "1", "--b-step", "0.25", "--temp",
        "0.2", "--sites", "2", "--out", out,
    ];
    args.extend_from_slice(extra);
    args
}

#[test]
fn sweep_writes_csv_with_fixed_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let out_str = out.to_str().unwrap();
    let result = xychain(&sweep_args(out_str, &[]));
    assert!(
        result.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&result.stderr)
    );
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "pattern,gamma,n_sites,temperature,B,negativity"
    );
    // both patterns x 2 gammas x 9 grid points
    assert_eq!(text.lines().count(), 1 + 4 * 9);
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 6));
}

#[test]
fn sweep_json_contains_series_and_peaks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.json");
    let out_str = out.to_str().unwrap();
    let result = xychain(&sweep_args(
        out_str,
        &["--format", "json", "--pattern", "staggered"],
    ));
    assert!(result.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let series = value["series"].as_array().unwrap();
    assert_eq!(series.len(), 2);
    for s in series {
        assert_eq!(s["pattern"], "staggered");
        assert_eq!(s["samples"].as_array().unwrap().len(), 9);
        assert!(s["peaks"].is_array());
    }
}

#[test]
fn identical_configs_produce_byte_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert!(xychain(&sweep_args(a.to_str().unwrap(), &[]))
        .status
        .success());
    assert!(xychain(&sweep_args(b.to_str().unwrap(), &[]))
        .status
        .success());
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn invalid_arguments_exit_code_1() {
    // unknown flag
    let result = xychain(&["sweep", "--no-such-flag"]);
    assert_eq!(result.status.code(), Some(1));
    // missing required arguments
    let result = xychain(&["sweep"]);
    assert_eq!(result.status.code(), Some(1));
    // bad domain values (odd site count) are also argument errors
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let result = xychain(&[
        "sweep",
        "--gamma",
        "0.5",
        "--temp",
        "0.2",
        "--sites",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    assert!(!out.exists());
    // inverted field range
    let result = xychain(&[
        "sweep",
        "--gamma",
        "0.5",
        "--b-min",
        "2",
        "--b-max",
        "-2",
        "--temp",
        "0.2",
        "--sites",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn unwritable_output_path_exit_code_1() {
    let result = xychain(&sweep_args("/nonexistent-dir/sweep.csv", &[]));
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn verify_passes_and_prints_report_lines() {
    let result = xychain(&["verify"]);
    assert!(
        result.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&result.stderr)
    );
    let stdout = String::from_utf8(result.stdout).unwrap();
    let pass_lines = stdout.lines().filter(|l| l.starts_with("pass")).count();
    assert!(
        pass_lines >= 7,
        "expected at least 7 check lines:\n{stdout}"
    );
    assert!(stdout.contains("all"));
}

#[test]
fn help_exits_zero() {
    let result = xychain(&["--help"]);
    assert_eq!(result.status.code(), Some(0));
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(text.contains("sweep") && text.contains("verify"));
}

#[test]
fn gamma_zero_curves_coincide_in_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g0.csv");
    let result = xychain(&[
        "sweep",
        "--gamma",
        "0",
        "--b-min",
        "-1",
        "--b-max",
        "1",
        "--b-step",
        "0.5",
        "--temp",
        "0.2",
        "--sites",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut uniform = Vec::new();
    let mut staggered = Vec::new();
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let value: f64 = fields[5].parse().unwrap();
        match fields[0] {
            "uniform" => uniform.push(value),
            "staggered" => staggered.push(value),
            other => panic!("unexpected pattern {other}"),
        }
    }
    assert_eq!(uniform.len(), staggered.len());
    for (u, s) in uniform.iter().zip(&staggered) {
        assert!((u - s).abs() < 1e-10);
    }
}

#[test]
fn output_parent_dir_is_not_created_implicitly() {
    // regression guard for the error path: we report, not create
    let dir = tempfile::tempdir().unwrap();
    let nested = dir.path().join("missing").join("sweep.csv");
    let result = xychain(&sweep_args(nested.to_str().unwrap(), &[]));
    assert_eq!(result.status.code(), Some(1));
    assert!(!Path::new(&nested).exists());
}
