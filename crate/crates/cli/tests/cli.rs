//! End-to-end checks of the `ocbench` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ocbench(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ocbench"))
        .arg("--out")
        .arg(out)
        .args(args)
        .output()
        .expect("spawn ocbench")
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

#[test]
fn malformed_config_exits_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, "{\n  \"alpha\": 10,\n  \"n\": ,\n}\n").unwrap();
    let out = ocbench(dir.path(), &["--config", cfg.to_str().unwrap(), "verify"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn invalid_field_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"alpha_grid": {"start": 1e2, "stop": 1e6, "points": 2}}"#).unwrap();
    let out = ocbench(dir.path(), &["--config", cfg.to_str().unwrap(), "sweep"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha_grid.points"));

    fs::write(&cfg, r#"{"seed": 1, "colour": "blue"}"#).unwrap();
    let out = ocbench(dir.path(), &["--config", cfg.to_str().unwrap(), "sweep"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn sweep_writes_one_row_per_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let out = ocbench(dir.path(), &["--domain", "annulus", "sweep", "--quantity", "ctrl_g"]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("sweep_annulus_ctrl_g.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "alpha,quantity,dirichlet_value,robin_value,gap,alpha_times_gap");
    assert_eq!(lines.len(), 1 + 8);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn solve_and_coeffs_have_fixed_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = ocbench(dir.path(), &["--domain", "shell", "--n", "11", "solve"]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("solve_shell.csv")).unwrap();
    assert_eq!(text.lines().next(), Some("coord,u,p,u_alpha,p_alpha"));
    assert_eq!(text.lines().count(), 12);

    let out = ocbench(dir.path(), &["--domain", "rectangle", "coeffs"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("coeffs_rectangle.json")).unwrap()).unwrap();
    let k1 = json["dirichlet"]["k1"].as_f64().unwrap();
    assert_eq!(k1, 2.0 / 15.0);
}

#[test]
fn optimal_reports_the_oracle_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let out = ocbench(dir.path(), &["--domain", "annulus", "--problem", "gq", "--variant", "robin:1000", "optimal"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let files = read_dir_sorted(dir.path());
    assert_eq!(files.len(), 1, "{:?}", files.iter().map(|f| &f.0).collect::<Vec<_>>());
    let json: serde_json::Value = serde_json::from_slice(&files[0].1).unwrap();
    assert_eq!(json["verdict"], "pass");
    assert!(json["rel_gap"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn limits_flags_printed_misprints_and_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = ocbench(dir.path(), &["--domain", "annulus", "limits"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("formula audit:") && stdout.contains("L2"), "{stdout}");
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("limits.json")).unwrap()).unwrap();
    for entry in json.as_array().unwrap() {
        assert_eq!(entry["in_use_verdict"], "pass", "{entry}");
    }
}

#[test]
fn every_subcommand_is_deterministic() {
    let runs: [&[&str]; 6] = [
        &["solve"],
        &["coeffs"],
        &["--problem", "b", "optimal"],
        &["sweep", "--quantity", "cost_J2"],
        &["limits"],
        &["--domain", "rectangle", "verify"],
    ];
    for args in runs {
        let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        let (oa, ob) = (ocbench(a.path(), args), ocbench(b.path(), args));
        assert_eq!(oa.status.code(), ob.status.code(), "{args:?}");
        assert_eq!(oa.stdout, ob.stdout, "{args:?}");
        assert_eq!(read_dir_sorted(a.path()), read_dir_sorted(b.path()), "{args:?}");
    }
}

#[test]
fn report_aggregates_row_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ocbench(dir.path(), &["--domain", "rectangle", "verify"]).status.code(), Some(0));
    assert_eq!(ocbench(dir.path(), &["limits"]).status.code(), Some(1));
    let verify_rows = fs::read_to_string(dir.path().join("verify_rows.csv")).unwrap().lines().count() - 1;
    let limit_rows = fs::read_to_string(dir.path().join("limits_rows.csv")).unwrap().lines().count() - 1;

    let out = ocbench(dir.path(), &["report"]);
    assert_eq!(out.status.code(), Some(0));
    let report = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert_eq!(report.lines().count() - 1, verify_rows + limit_rows);
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["files"], serde_json::json!(["limits_rows.csv", "verify_rows.csv"]));
    assert_eq!(summary["summary"]["rows"].as_u64().unwrap() as usize, verify_rows + limit_rows);
    assert!(summary["summary"]["fail"].as_u64().unwrap() > 0);
}

#[test]
fn report_on_empty_directory_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ocbench(dir.path(), &["report"]).status.code(), Some(2));
}
