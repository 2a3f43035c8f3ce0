use std::path::Path;
use std::process::{Command, Output};

use esd_core::cli::CSV_HEADER;
use esd_core::entanglement;
use esd_core::states::DensityMatrix;

fn esd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esd"))
        .args(args)
        .output()
        .expect("esd binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn esd_time_qubit() {
    let out = esd(&["esd-time", "--scenario", "qubit", "--x", "0.25", "--rate-a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let value = |key: &str| -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(key))
            .unwrap()
            .trim()
            .parse()
            .unwrap()
    };
    assert!(text.contains("analytic 1.3862943"), "{text}");
    assert!((value("numeric ") - 2.0 * std::f64::consts::LN_2).abs() < 1e-8);
    assert!(value("difference ") < 1e-8);
}

#[test]
fn esd_time_never_entangled() {
    let out = esd(&["esd-time", "--x", "0.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("never-entangled"));
}

#[test]
fn usage_errors_exit_one() {
    let out = esd(&["curve", "--x", "0.3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--x"), "{err}");
    assert_eq!(esd(&["--steps", "1"]).status.code(), Some(1));
    assert_eq!(esd(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn unwritable_output_exits_three() {
    let out = esd(&["curve", "--out", "/nonexistent-dir/curve.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selfcheck_defaults_pass() {
    let out = esd(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn two_step_curve() {
    let out = esd(&["curve", "--steps", "2", "--t-max", "3"]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows[1][0], 3.0);
}

#[test]
fn curve_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = esd(&[
            "curve",
            "--scenario",
            "multilocal",
            "--rate-b",
            "0.5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let first = run("a.csv");
    assert_eq!(first, run("b.csv"));
    assert_eq!(csv_rows(std::str::from_utf8(&first).unwrap()).len(), 101);
}

fn dump_state(dir: &Path, scenario: &str, t: f64) -> DensityMatrix {
    let path = dir.join("state.txt");
    let t = format!("{t:.16e}");
    let out = esd(&[
        "dump-state",
        "--scenario",
        scenario,
        "--t-max",
        &t,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    DensityMatrix::from_text(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn csv_negativity_matches_dumped_state() {
    let dir = tempfile::tempdir().unwrap();
    for scenario in ["qubit", "qutrit", "multilocal"] {
        let rows = csv_rows(&stdout(&esd(&["curve", "--scenario", scenario, "--steps", "9"])));
        for row in rows.iter().skip(1) {
            let rho = dump_state(dir.path(), scenario, row[0]);
            let n = entanglement::negativity(&rho);
            assert!((n.value - row[4]).abs() <= 1e-12, "{scenario} t={}", row[0]);
            assert!((rho.corner() - row[3]).abs() <= 1e-12);
        }
    }
}
