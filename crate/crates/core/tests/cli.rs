//! End-to-end checks of the `quatec` binary: subcommand output formats
//! and the 0/1/2 exit-status contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn quatec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatec"))
        .current_dir(repo_root())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn replicate_emits_full_csv() {
    let out = quatec(&["bench", "replicate"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "scenario,detected,stabilizer_corrected,stabilizer_pct,qostbc_corrected,qostbc_pct"
    );
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with(['s', '#'])).collect();
    assert_eq!(data.len(), 24);
    assert!(text.contains("Z1,50,49.00,98.00,51.45,102.90"));
    assert!(text.contains("Z3,100,98.00,98.00,97.88,97.88"));
    assert!(text.contains("Z4,50,45.00,90.00,47.25,94.50"));
    assert!(text.contains("# discrepancy scenario=Z3 detected=90"));
    assert!(text.contains("# discrepancy scenario=Z4 detected=90"));
}

#[test]
fn replicate_writes_files() {
    let dir = std::env::temp_dir().join("quatec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("tables.csv");
    let svg = dir.join("tables.svg");
    let out = quatec(&[
        "bench",
        "replicate",
        "--out",
        csv.to_str().unwrap(),
        "--plot",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv_text.lines().count(), 1 + 24 + 2);
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg_text.matches("<polyline").count(), 8);
}

#[test]
fn monte_carlo_is_deterministic_across_thread_flags() {
    let scenario = repo_root().join("scenarios/z1_fixed_weight.json");
    let scenario = scenario.to_str().unwrap();
    let a = quatec(&["bench", "monte-carlo", "--scenario", scenario, "--threads", "1"]);
    let b = quatec(&["bench", "monte-carlo", "--scenario", scenario, "--threads", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.starts_with(
        "scenario,trials,detected,corrected,in_stabilizer,logical_errors,undetected_nonidentity,empirical_pd,seed"
    ));
    // Fixed-weight-1 errors on a distance-3 code: everything corrects.
    let fields: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(fields[0], "Z1");
    assert_eq!(fields[1], "10000");
    assert_eq!(fields[2], "10000"); // detected
    assert_eq!(fields[3], "10000"); // corrected
    assert_eq!(fields[5], "0"); // logical errors
}

#[test]
fn verify_passes_on_shipped_codes() {
    for (code, w) in [("codes/Z1.stab", "2"), ("codes/Z2.stab", "2"), ("codes/Z3.stab", "3")] {
        let out = quatec(&["verify", "--code", code, "--max-weight", w]);
        assert!(out.status.success(), "{code}");
        let text = stdout(&out);
        assert!(text.contains("check_generators: pass"));
        assert!(text.contains("verify_distance: no logical operator"));
    }
}

#[test]
fn verify_fails_on_bad_code() {
    let dir = std::env::temp_dir().join("quatec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.stab");
    std::fs::write(&bad, "n=2 k=0 d=1\nXI\nZI\n").unwrap();
    let out = quatec(&["verify", "--code", bad.to_str().unwrap(), "--max-weight", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // A refuted distance claim also exits 1.
    let overclaimed = dir.join("overclaimed.stab");
    std::fs::write(&overclaimed, "n=3 k=1 d=3\nZZI\nIZZ\n").unwrap();
    let out = quatec(&[
        "verify",
        "--code",
        overclaimed.to_str().unwrap(),
        "--max-weight",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn usage_errors_exit_two() {
    let out = quatec(&["bench", "no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    let out = quatec(&["verify"]); // missing required args
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn design_prints_matrix_and_metrics() {
    let out = quatec(&["design", "--alamouti", "1,0,0,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("matrix row 0"));
    assert!(text.contains("orthogonality_degree"));
    assert!(text.contains("quasi_orthogonality_deviation"));
}

#[test]
fn metrics_pd_prints_single_line() {
    let out = quatec(&["metrics", "pd", "--pe", "0.1", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0.271000");

    let out = quatec(&["metrics", "pd", "--pe", "1.5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scaling_runs_on_builtins() {
    let out = quatec(&[
        "bench",
        "scaling",
        "--codes",
        "builtin:steane",
        "builtin:shor",
        "codes/Z3.stab",
        "--trials",
        "100",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("code,n,k,trials,median_decode_seconds,mean_decode_seconds"));
    assert_eq!(text.lines().count(), 1 + 3 + 1);
    assert!(text.contains("# fit t = c * N * log2(M)"));
}
