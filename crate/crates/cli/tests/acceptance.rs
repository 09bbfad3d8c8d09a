//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs as a plain binary so the lines appear in `cargo test` output. The
//! process fails when any criterion fails, except the printed-formula audit,
//! which is expected to fail on exactly the known misprints and nothing else.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};

use ocbench::config::Tolerances;
use ocbench::suite::{self, Case};
use ocbench::{BenchConfig, ReportRow, Verdict};
use ocbench_core::limits::all_limits;
use ocbench_core::{DomainGeometry, GeometryKind, ProblemData, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_0cbe;

type Outcome = Result<Vec<ReportRow>, Box<dyn std::error::Error>>;

struct Line {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Line {
    fn print(&self) {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        println!("criterion {} | {:<34} | {verdict} | {}", self.id, self.title, self.detail);
        for n in &self.notes {
            println!("    {n}");
        }
    }
}

fn failures(rows: &[ReportRow]) -> Vec<&ReportRow> {
    rows.iter().filter(|r| r.verdict.is_failure()).collect()
}

fn describe(r: &ReportRow) -> String {
    format!("{} {} {} {}: gap {:.3e} > {:.1e}", r.domain, r.problem, r.variant, r.quantity, r.rel_gap.0, r.tolerance.0)
}

/// Largest judged gap among rows whose quantity starts with `prefix`.
fn worst(rows: &[ReportRow], prefix: &str) -> f64 {
    rows.iter()
        .filter(|r| r.quantity.starts_with(prefix) && r.verdict == Verdict::Pass)
        .map(|r| r.rel_gap.0)
        .fold(0.0, f64::max)
}

fn row_line(id: u32, title: &'static str, rows: Vec<ReportRow>, summary: String) -> Line {
    let bad = failures(&rows);
    let detail = format!("{} rows, {} fail; {summary}", rows.len(), bad.len());
    let notes = bad.iter().take(10).map(|r| describe(r)).collect();
    Line { id, title, pass: bad.is_empty(), detail, notes }
}

fn random_cases(rng: &mut ChaCha8Rng, per_domain: usize) -> Vec<(Case, f64)> {
    let mut out = Vec::new();
    for kind in GeometryKind::ALL {
        for i in 0..per_domain {
            let case = suite::random_case(rng, kind).named(format!("{}-random{i}", kind.name()));
            out.push((case, suite::random_alpha(rng)));
        }
    }
    out
}

fn default_cases(cfg: &BenchConfig) -> Vec<Case> {
    cfg.problems
        .iter()
        .map(|p| Case::new(p.geometry().expect("default geometry"), p.problem_data().expect("default data")))
        .collect()
}

fn closed_form_validity(rng: &mut ChaCha8Rng, cfg: &BenchConfig) -> Outcome {
    let mut rows = Vec::new();
    for (case, alpha) in random_cases(rng, 20) {
        rows.extend(suite::residual_rows(&case, alpha, &cfg.tolerances)?);
        rows.extend(suite::fd_ratio_rows(&case, alpha, cfg.n, &cfg.tolerances)?);
    }
    Ok(rows)
}

fn coefficient_audit(rng: &mut ChaCha8Rng, cfg: &BenchConfig) -> Outcome {
    let alphas = cfg.alpha_grid.values()?;
    let mut rows = Vec::new();
    for (case, alpha) in random_cases(rng, 20) {
        rows.extend(suite::misfit_rows(&case, alpha, &cfg.tolerances)?);
        let mut table = vec![alpha, 1.0, 1e-3];
        table.extend(&alphas);
        rows.extend(suite::coefficient_table_rows(&case, &table));
    }
    for case in default_cases(cfg) {
        rows.extend(suite::coefficient_table_rows(&case, &[cfg.alpha]));
    }
    Ok(rows)
}

fn optimal_audit(rng: &mut ChaCha8Rng, cfg: &BenchConfig) -> Outcome {
    let mut rows = Vec::new();
    for (case, alpha) in random_cases(rng, 10) {
        for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
            rows.extend(suite::optimal_rows(&case, variant, &cfg.tolerances)?);
        }
    }
    Ok(rows)
}

fn gap_identity(cfg: &BenchConfig) -> Outcome {
    let mut rows = Vec::new();
    for case in default_cases(cfg).iter().filter(|c| c.geom.kind() == GeometryKind::Rectangle) {
        rows.extend(suite::gap_identity_rows(case, &[10.0, 1e4], &cfg.tolerances)?);
    }
    Ok(rows)
}

fn rates(cfg: &BenchConfig) -> Result<Line, Box<dyn std::error::Error>> {
    let alphas = cfg.alpha_grid.values()?;
    let mut rows = Vec::new();
    for case in default_cases(cfg) {
        let swept = suite::sweep_limits(&case, &alphas)?;
        rows.extend(suite::rate_rows(&case, &swept, &cfg.tolerances));
    }
    let slopes: Vec<f64> = rows.iter().map(|r| r.oracle.0).filter(|s| s.is_finite()).collect();
    let lo = slopes.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = slopes.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut line = row_line(5, "rate verification", rows, format!("slopes in [{lo:.4}, {hi:.4}]"));

    // A small leading constant pushes the asymptotic regime past the grid.
    let shell = Case::new(DomainGeometry::shell(1.0, 2.0)?, ProblemData::new(1.0, 2.0, 1.0, 0.25, [1.0; 5])?)
        .named("shell-unit-weights");
    let swept = suite::sweep_limits(&shell, &alphas)?;
    for r in suite::rate_rows(&shell, &swept, &cfg.tolerances).iter().filter(|r| r.verdict.is_failure()) {
        line.notes.push(format!(
            "note: {} {} slope {:.4} with all weights 1 (pre-asymptotic; not part of the criterion)",
            r.domain, r.quantity, r.oracle.0
        ));
    }
    Ok(line)
}

fn limits(rng: &mut ChaCha8Rng, cfg: &BenchConfig) -> Result<(Line, bool), Box<dyn std::error::Error>> {
    let alphas = cfg.alpha_grid.values()?;
    let mut cases = default_cases(cfg);
    cases.extend(random_cases(rng, 10).into_iter().map(|(c, _)| c));

    let mut in_use = Vec::new();
    let mut printed_failures: BTreeSet<(&'static str, String)> = BTreeSet::new();
    let mut findings = Vec::new();
    let mut printed_rows = 0;
    for case in &cases {
        let kind = case.geom.kind().name();
        let swept = suite::sweep_limits(case, &alphas)?;
        in_use.extend(suite::limit_rows(case, &swept, &cfg.tolerances));
        let printed = suite::printed_limit_rows(case, &swept, &cfg.tolerances);
        printed_rows += printed.len();
        for (s, r) in swept.iter().zip(&printed) {
            if r.verdict.is_failure() && printed_failures.insert((kind, s.constant.label())) {
                findings.push(format!(
                    "formula audit: {kind} {} printed as \"{}\": printed {:.6e} vs extrapolated {:.6e} ({})",
                    s.constant.label(),
                    s.constant.printed_form,
                    s.constant.printed,
                    s.extrapolated(),
                    case.name
                ));
            }
        }
    }

    let mut known: BTreeSet<(&'static str, String)> = BTreeSet::new();
    for case in default_cases(cfg) {
        for c in all_limits(&case.geom, &case.data).into_iter().filter(|c| c.is_corrected()) {
            known.insert((case.geom.kind().name(), c.label()));
        }
    }

    let in_use_bad = failures(&in_use);
    let audit_matches = printed_failures == known;
    let detail = format!(
        "{} printed rows over {} cases, {} printed expressions fail; {} in-use rows, {} fail, worst {:.2e}",
        printed_rows,
        cases.len(),
        printed_failures.len(),
        in_use.len(),
        in_use_bad.len(),
        worst(&in_use, "limit:")
    );
    let mut notes = findings;
    notes.extend(in_use_bad.iter().map(|r| format!("in-use mismatch: {}", describe(r))));
    if !audit_matches {
        for k in printed_failures.difference(&known) {
            notes.push(format!("unexpected printed failure: {} {}", k.0, k.1));
        }
        for k in known.difference(&printed_failures) {
            notes.push(format!("known misprint not detected: {} {}", k.0, k.1));
        }
    } else {
        notes.push(format!("every failure is one of the {} known misprints; corrected forms all pass", known.len()));
    }
    let line = Line { id: 6, title: "limit constants", pass: printed_failures.is_empty() && in_use_bad.is_empty(), detail, notes };
    Ok((line, audit_matches && in_use_bad.is_empty()))
}

fn simultaneous(rng: &mut ChaCha8Rng, cfg: &BenchConfig) -> Outcome {
    let mut rows = Vec::new();
    for (case, alpha) in random_cases(rng, 10) {
        for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
            rows.extend(suite::simultaneous_rows(&case, variant, &cfg.tolerances)?);
        }
    }
    Ok(rows)
}

fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .expect("output directory")
        .map(|e| e.expect("dir entry").path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).expect("output file")))
        .collect();
    files.sort();
    files
}

fn determinism() -> Line {
    let run = || {
        let dir = tempfile::tempdir().expect("tempdir");
        let out = Command::new(env!("CARGO_BIN_EXE_ocbench"))
            .arg("--out")
            .arg(dir.path())
            .arg("verify")
            .output()
            .expect("run ocbench verify");
        (out.status.code(), out.stdout, snapshot(dir.path()))
    };
    let (code_a, stdout_a, files_a) = run();
    let (code_b, stdout_b, files_b) = run();
    let identical = stdout_a == stdout_b && files_a == files_b;
    let pass = identical && code_a == Some(0) && code_b == Some(0);
    let detail = format!(
        "exit codes {:?}/{:?}, {} files, {}",
        code_a,
        code_b,
        files_a.len(),
        if identical { "byte-identical" } else { "outputs differ" }
    );
    Line { id: 8, title: "determinism", pass, detail, notes: Vec::new() }
}

fn main() -> ExitCode {
    let cfg = BenchConfig::default();
    let tol: &Tolerances = &cfg.tolerances;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut lines = Vec::new();
    let mut setup_error = None;
    let mut guard = |r: Result<Line, Box<dyn std::error::Error>>, id: u32, title: &'static str| match r {
        Ok(l) => l,
        Err(e) => {
            setup_error = Some(format!("criterion {id}: {e}"));
            Line { id, title, pass: false, detail: format!("error: {e}"), notes: Vec::new() }
        }
    };

    let c1 = closed_form_validity(&mut rng, &cfg).map(|rows| {
        let ratios: Vec<f64> = rows
            .iter()
            .filter(|r| r.quantity.starts_with("fd_ratio") && r.verdict == Verdict::Pass)
            .map(|r| r.oracle.0)
            .collect();
        let exact = rows.iter().filter(|r| r.verdict == Verdict::Exact).count();
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let summary = format!(
            "max residual {:.2e} (tol {:.0e}), FD ratios in [{lo:.3}, {hi:.3}], {exact} exact to round-off",
            worst(&rows, "residual"),
            tol.residual
        );
        row_line(1, "closed-form validity", rows, summary)
    });
    lines.push(guard(c1, 1, "closed-form validity"));

    let c2 = coefficient_audit(&mut rng, &cfg).map(|rows| {
        let summary = format!("worst misfit gap {:.2e} (tol {:.0e}), tables exact", worst(&rows, "half_misfit"), tol.quadrature);
        row_line(2, "coefficient audit", rows, summary)
    });
    lines.push(guard(c2, 2, "coefficient audit"));

    let c3 = optimal_audit(&mut rng, &cfg).map(|rows| {
        let summary = format!(
            "worst optimizer gap {:.2e}, cost {:.2e}, gradient {:.2e}",
            worst(&rows, "control"),
            worst(&rows, "cost_at_optimum"),
            worst(&rows, "gradient")
        );
        row_line(3, "optimal-control audit", rows, summary)
    });
    lines.push(guard(c3, 3, "optimal-control audit"));

    let c4 = gap_identity(&cfg).map(|rows| {
        let summary = format!(
            "closed form {:.2e} (tol {:.0e}), quadrature {:.2e} (tol {:.0e})",
            worst(&rows, "state_gap_identity"),
            tol.gap_identity,
            rows.iter()
                .filter(|r| r.quantity.ends_with(":quadrature"))
                .map(|r| r.rel_gap.0)
                .fold(0.0, f64::max),
            tol.gap_identity_quadrature
        );
        row_line(4, "rectangle gap identity", rows, summary)
    });
    lines.push(guard(c4, 4, "rectangle gap identity"));

    lines.push(guard(rates(&cfg), 5, "rate verification"));

    let mut audit_as_documented = false;
    let c6 = limits(&mut rng, &cfg).map(|(line, ok)| {
        audit_as_documented = ok;
        line
    });
    lines.push(guard(c6, 6, "limit constants"));

    let c7 = simultaneous(&mut rng, &cfg).map(|rows| {
        let summary = format!("worst pairwise gap {:.2e} (tol {:.0e})", worst(&rows, ""), tol.oracle);
        row_line(7, "simultaneous-control consistency", rows, summary)
    });
    lines.push(guard(c7, 7, "simultaneous-control consistency"));

    lines.push(determinism());

    for l in &lines {
        l.print();
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed} of {} criteria pass", lines.len());

    let unexpected = lines.iter().any(|l| !l.pass && l.id != 6) || !audit_as_documented || setup_error.is_some();
    if let Some(e) = setup_error {
        eprintln!("{e}");
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
