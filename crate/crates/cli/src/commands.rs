//! Subcommand implementations. Each returns the text for stdout and the files
//! it wrote; nothing here prints or exits.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ocbench_core::coefficients::coefficients;
use ocbench_core::oracle::{minimize_pair_quadratic, minimize_scalar_quadratic};
use ocbench_core::profile::profile_for;
use ocbench_core::{
    alpha_sweep, evaluate_cost, optimal_control, ControlKind, ControlValue, FieldKind, GeometryKind, LimitName,
    Quantity, Variant,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::BenchConfig;
use crate::error::CliError;
use crate::report::{self, relative_gap, render_table, rows_from_csv, rows_to_csv, Csv, ReportRow, Sci, Summary, Verdict};
use crate::suite::{self, Case};

#[derive(Debug, Parser)]
#[command(name = "ocbench", version, about = "Closed-form optimal heat-control benchmark and its oracle audit")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// JSON run configuration; built-in defaults when absent.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory (overrides the config).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Restrict to one configured domain: rectangle, annulus or shell.
    #[arg(long, global = true)]
    pub domain: Option<String>,
    /// Control problem: g, q, b or gq (default: all four).
    #[arg(long, global = true)]
    pub problem: Option<String>,
    /// `dirichlet` or `robin:<alpha>` (default: both, Robin at the config α).
    #[arg(long, global = true)]
    pub variant: Option<String>,
    /// Robin coefficient for single-α checks.
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Grid size: sample points for `solve`, FD intervals otherwise.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long = "tol-self", global = true)]
    pub tol_self: Option<f64>,
    #[arg(long = "tol-oracle", global = true)]
    pub tol_oracle: Option<f64>,
    #[arg(long = "tol-limit", global = true)]
    pub tol_limit: Option<f64>,
    #[arg(long = "tol-residual", global = true)]
    pub tol_residual: Option<f64>,
    #[arg(long = "tol-quadrature", global = true)]
    pub tol_quadrature: Option<f64>,
    #[arg(long = "tol-gradient", global = true)]
    pub tol_gradient: Option<f64>,
    #[arg(long = "tol-slope", global = true)]
    pub tol_slope: Option<f64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Sample the state and adjoint, Dirichlet and Robin, as CSV.
    Solve,
    /// Print the six misfit coefficients for both boundary conditions.
    Coeffs,
    /// Closed-form optimal control against the brute-force minimizer.
    Optimal,
    /// Robin-versus-Dirichlet gaps over the α grid, one CSV per quantity.
    Sweep {
        /// One quantity (e.g. `ctrl_g`, `cost_J4`, `state`, `k3`); default all.
        #[arg(long)]
        quantity: Option<String>,
    },
    /// Audit the printed limit constants against the sweep extrapolation.
    Limits,
    /// Run the full oracle suite and print a pass/fail table.
    Verify,
    /// Aggregate every `*_rows.csv` in the output directory.
    Report,
}

/// What a subcommand produced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    /// Paths relative to the output directory.
    pub files: Vec<String>,
    pub failed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }
}

struct Ctx {
    cfg: BenchConfig,
    opts: Options,
    out: PathBuf,
    written: Vec<String>,
}

impl Ctx {
    fn write(&mut self, name: &str, contents: &str) -> Result<(), CliError> {
        report::write_file(&self.out.join(name), contents)?;
        self.written.push(name.to_string());
        Ok(())
    }

    fn cases(&self) -> Result<Vec<Case>, CliError> {
        self.cfg
            .select(self.opts.domain.as_deref())?
            .into_iter()
            .map(|p| Ok(Case::new(p.geometry()?, p.problem_data()?)))
            .collect()
    }

    fn variants(&self) -> Result<Vec<Variant>, CliError> {
        match self.opts.variant.as_deref() {
            None => Ok(vec![Variant::Dirichlet, Variant::robin(self.cfg.alpha)?]),
            Some(v) => parse_variant(v, self.cfg.alpha).map(|v| vec![v]),
        }
    }

    fn kinds(&self) -> Result<Vec<ControlKind>, CliError> {
        match self.opts.problem.as_deref() {
            None => Ok(ControlKind::ALL.to_vec()),
            Some(tag) => ControlKind::from_tag(tag)
                .map(|k| vec![k])
                .ok_or_else(|| CliError::Usage(format!("unknown problem {tag:?}; expected g, q, b or gq"))),
        }
    }
}

pub fn parse_variant(text: &str, default_alpha: f64) -> Result<Variant, CliError> {
    let usage = || CliError::Usage(format!("unknown variant {text:?}; expected dirichlet or robin:<alpha>"));
    match text.split_once(':') {
        None if text == "dirichlet" => Ok(Variant::Dirichlet),
        None if text == "robin" => Variant::robin(default_alpha).map_err(|e| CliError::Usage(e.to_string())),
        Some(("robin", a)) => {
            let alpha: f64 = a.trim().parse().map_err(|_| usage())?;
            Variant::robin(alpha).map_err(|e| CliError::Usage(e.to_string()))
        }
        _ => Err(usage()),
    }
}

fn file_safe(label: &str) -> String {
    label.replace(':', "-")
}

/// Config from file or defaults, with command-line overrides applied.
pub fn resolve_config(opts: &Options, command: &Command) -> Result<BenchConfig, CliError> {
    let mut cfg = match &opts.config {
        Some(path) => BenchConfig::load(path)?,
        None => BenchConfig::default(),
    };
    if let Some(out) = &opts.out {
        cfg.output_dir = out.clone();
    }
    if let Some(a) = opts.alpha {
        cfg.alpha = a;
    }
    if let Some(n) = opts.n {
        if matches!(command, Command::Solve) {
            cfg.samples = n;
        } else {
            cfg.n = n;
        }
    }
    let t = &mut cfg.tolerances;
    for (slot, value) in [
        (&mut t.self_consistency, opts.tol_self),
        (&mut t.oracle, opts.tol_oracle),
        (&mut t.limit, opts.tol_limit),
        (&mut t.residual, opts.tol_residual),
        (&mut t.quadrature, opts.tol_quadrature),
        (&mut t.gradient, opts.tol_gradient),
        (&mut t.slope, opts.tol_slope),
    ] {
        if let Some(v) = value {
            *slot = v;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = resolve_config(&cli.opts, &cli.command)?;
    if let Some(d) = cli.opts.domain.as_deref() {
        if !GeometryKind::ALL.iter().any(|k| k.name() == d) {
            return Err(CliError::Usage(format!("unknown domain {d:?}; expected rectangle, annulus or shell")));
        }
    }
    let out = cfg.output_dir.clone();
    let mut ctx = Ctx { cfg, opts: cli.opts.clone(), out, written: Vec::new() };
    let (stdout, failed) = match &cli.command {
        Command::Solve => solve(&mut ctx)?,
        Command::Coeffs => coeffs(&mut ctx)?,
        Command::Optimal => optimal(&mut ctx)?,
        Command::Sweep { quantity } => sweep(&mut ctx, quantity.as_deref())?,
        Command::Limits => limits(&mut ctx)?,
        Command::Verify => verify(&mut ctx)?,
        Command::Report => aggregate(&mut ctx)?,
    };
    Ok(Outcome { stdout, files: ctx.written, failed })
}

fn wrote(files: &[String]) -> String {
    files.iter().map(|f| format!("wrote {f}\n")).collect()
}

fn solve(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let robin = Variant::robin(ctx.cfg.alpha)?;
    let points = ctx.cfg.samples;
    for case in ctx.cases()? {
        let fields = [
            profile_for(&case.geom, &case.data, FieldKind::State, Variant::Dirichlet),
            profile_for(&case.geom, &case.data, FieldKind::Adjoint, Variant::Dirichlet),
            profile_for(&case.geom, &case.data, FieldKind::State, robin),
            profile_for(&case.geom, &case.data, FieldKind::Adjoint, robin),
        ];
        let (lo, hi) = case.geom.interval();
        let mut csv = Csv::new(&["coord", "u", "p", "u_alpha", "p_alpha"]);
        for i in 0..points {
            let t = if i + 1 == points { hi } else { lo + (hi - lo) * i as f64 / (points - 1) as f64 };
            csv.row(std::iter::once(Sci(t)).chain(fields.iter().map(|f| Sci(f.value(t)))));
        }
        ctx.write(&format!("solve_{}.csv", case.name), csv.as_str())?;
    }
    Ok((wrote(&ctx.written), false))
}

#[derive(Serialize)]
struct CoefficientJson {
    k1: Sci,
    k2: Sci,
    k3: Sci,
    k4: Sci,
    k5: Sci,
    k6: Sci,
}

impl CoefficientJson {
    fn new(k: [f64; 6]) -> Self {
        Self { k1: Sci(k[0]), k2: Sci(k[1]), k3: Sci(k[2]), k4: Sci(k[3]), k5: Sci(k[4]), k6: Sci(k[5]) }
    }
}

#[derive(Serialize)]
struct CoeffsJson {
    domain: String,
    alpha: Sci,
    dirichlet: CoefficientJson,
    robin: CoefficientJson,
}

fn coeffs(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let mut stdout = String::new();
    for case in ctx.cases()? {
        let alpha = ctx.cfg.alpha;
        let doc = CoeffsJson {
            domain: case.name.clone(),
            alpha: Sci(alpha),
            dirichlet: CoefficientJson::new(coefficients(&case.geom, 0.0).k),
            robin: CoefficientJson::new(coefficients(&case.geom, 1.0 / alpha).k),
        };
        let text = report::to_json(&doc);
        stdout.push_str(&text);
        ctx.write(&format!("coeffs_{}.json", case.name), &text)?;
    }
    Ok((stdout, false))
}

#[derive(Serialize)]
#[serde(untagged)]
enum ControlJson {
    Scalar(Sci),
    Pair([Sci; 2]),
}

impl From<ControlValue> for ControlJson {
    fn from(c: ControlValue) -> Self {
        match c {
            ControlValue::Scalar(v) => Self::Scalar(Sci(v)),
            ControlValue::Pair(g, q) => Self::Pair([Sci(g), Sci(q)]),
        }
    }
}

#[derive(Serialize)]
struct OptimalJson {
    domain: String,
    problem: &'static str,
    variant: String,
    control: ControlJson,
    cost: Sci,
    oracle_control: ControlJson,
    oracle_cost: Sci,
    /// Largest relative gap over the control components and the cost.
    rel_gap: Sci,
    verdict: Verdict,
}

fn optimal(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let mut docs = Vec::new();
    let tol = ctx.cfg.tolerances.oracle;
    for case in ctx.cases()? {
        for kind in ctx.kinds()? {
            for variant in ctx.variants()? {
                let sol = optimal_control(&case.geom, &case.data, kind, variant)?;
                let cost = |c| evaluate_cost(&case.geom, &case.data, kind, c, variant).unwrap_or(f64::NAN);
                let s = [1.0, case.data.g.abs(), case.data.q.abs(), case.data.b.abs(), case.data.z_d.abs()]
                    .into_iter()
                    .fold(0.0, f64::max);
                let (oracle_control, oracle_cost) = match kind {
                    ControlKind::Simultaneous => {
                        let m = minimize_pair_quadratic(|g, q| cost(ControlValue::Pair(g, q)), s)?;
                        (ControlValue::Pair(m.argmin.0, m.argmin.1), m.value)
                    }
                    _ => {
                        let m = minimize_scalar_quadratic(|v| cost(ControlValue::Scalar(v)), s)?;
                        (ControlValue::Scalar(m.argmin), m.value)
                    }
                };
                let gap = sol
                    .control
                    .components()
                    .iter()
                    .zip(oracle_control.components())
                    .map(|(a, b)| relative_gap(*a, b))
                    .fold(relative_gap(sol.cost, oracle_cost), f64::max);
                let doc = OptimalJson {
                    domain: case.name.clone(),
                    problem: kind.tag(),
                    variant: variant.label(),
                    control: sol.control.into(),
                    cost: Sci(sol.cost),
                    oracle_control: oracle_control.into(),
                    oracle_cost: Sci(oracle_cost),
                    rel_gap: Sci(gap),
                    verdict: Verdict::judge(gap, tol),
                };
                let name = format!("optimal_{}_{}_{}.json", case.name, kind.tag(), file_safe(&variant.label()));
                ctx.write(&name, &report::to_json(&doc))?;
                docs.push(doc);
            }
        }
    }
    let failed = docs.iter().any(|d| d.verdict.is_failure());
    Ok((report::to_json(&docs), failed))
}

pub const SWEEP_HEADER: [&str; 6] = ["alpha", "quantity", "dirichlet_value", "robin_value", "gap", "alpha_times_gap"];

fn sweep(ctx: &mut Ctx, quantity: Option<&str>) -> Result<(String, bool), CliError> {
    let quantities: Vec<Quantity> = match quantity {
        Some(name) => vec![Quantity::from_name(name)
            .ok_or_else(|| CliError::Usage(format!("unknown quantity {name:?}")))?],
        None => LimitName::ALL.iter().map(|&n| Quantity::Gap(n)).chain([Quantity::ThirdCoefficient]).collect(),
    };
    let alphas = ctx.cfg.alpha_grid.values()?;
    for case in ctx.cases()? {
        for &q in &quantities {
            let mut csv = Csv::new(&SWEEP_HEADER);
            for r in alpha_sweep(&case.geom, &case.data, q, &alphas)? {
                csv.row([
                    Sci(r.alpha).to_string(),
                    q.name().to_string(),
                    Sci(r.dirichlet_value).to_string(),
                    Sci(r.robin_value).to_string(),
                    Sci(r.gap).to_string(),
                    Sci(r.alpha_times_gap).to_string(),
                ]);
            }
            ctx.write(&format!("sweep_{}_{}.csv", case.name, q.name()), csv.as_str())?;
        }
    }
    Ok((wrote(&ctx.written), false))
}

#[derive(Serialize)]
struct LimitJson {
    domain: String,
    name: String,
    /// Value of the printed expression.
    closed_form: Sci,
    extrapolated: Sci,
    rel_diff: Sci,
    verdict: Verdict,
    printed_form: &'static str,
    erratum: Option<&'static str>,
    in_use: Sci,
    in_use_rel_diff: Sci,
    in_use_verdict: Verdict,
}

fn limits(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let alphas = ctx.cfg.alpha_grid.values()?;
    let tol = ctx.cfg.tolerances.clone();
    let mut docs = Vec::new();
    let mut rows = Vec::new();
    for case in ctx.cases()? {
        let swept = suite::sweep_limits(&case, &alphas)?;
        let printed = suite::printed_limit_rows(&case, &swept, &tol);
        let in_use = suite::limit_rows(&case, &swept, &tol);
        for ((s, p), u) in swept.iter().zip(&printed).zip(&in_use) {
            docs.push(LimitJson {
                domain: case.name.clone(),
                name: s.constant.label(),
                closed_form: p.closed_form,
                extrapolated: p.oracle,
                rel_diff: p.rel_gap,
                verdict: p.verdict,
                printed_form: s.constant.printed_form,
                erratum: s.constant.erratum,
                in_use: u.closed_form,
                in_use_rel_diff: u.rel_gap,
                in_use_verdict: u.verdict,
            });
        }
        rows.extend(printed);
        rows.extend(in_use);
    }
    ctx.write("limits.json", &report::to_json(&docs))?;
    ctx.write("limits_rows.csv", &rows_to_csv(&rows))?;
    let mut stdout = render_table(&rows);
    for d in docs.iter().filter(|d| d.verdict.is_failure()) {
        stdout.push_str(&format!("formula audit: {} {} printed as {}\n", d.domain, d.name, d.printed_form));
    }
    let failed = rows.iter().any(|r| r.verdict.is_failure());
    Ok((stdout, failed))
}

/// Every check of the suite on the configured problems; the single-α checks
/// also run on seeded random inputs. The rectangle gap identity stays on the
/// configured problems: at large α forming `u_α − u` cancels about
/// `log10(α·max|u|/|q − g x0|)` digits, which random data can push past the
/// 1e-12 bound.
pub fn verify_rows(cfg: &BenchConfig, domain: Option<&str>) -> Result<Vec<ReportRow>, CliError> {
    let tol = &cfg.tolerances;
    let alphas = cfg.alpha_grid.values()?;
    let mut rows = Vec::new();
    let single_alpha = |case: &Case, alpha: f64, rows: &mut Vec<ReportRow>| -> Result<(), CliError> {
        rows.extend(suite::residual_rows(case, alpha, tol)?);
        rows.extend(suite::fd_ratio_rows(case, alpha, cfg.n, tol)?);
        rows.extend(suite::misfit_rows(case, alpha, tol)?);
        for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
            rows.extend(suite::optimal_rows(case, variant, tol)?);
            rows.extend(suite::simultaneous_rows(case, variant, tol)?);
        }
        Ok(())
    };
    for p in cfg.select(domain)? {
        let case = Case::new(p.geometry()?, p.problem_data()?);
        single_alpha(&case, cfg.alpha, &mut rows)?;
        rows.extend(suite::gap_identity_rows(&case, &[10.0, 1e4], tol)?);
        let mut table_alphas = vec![cfg.alpha];
        table_alphas.extend(&alphas);
        rows.extend(suite::coefficient_table_rows(&case, &table_alphas));
        let swept = suite::sweep_limits(&case, &alphas)?;
        rows.extend(suite::rate_rows(&case, &swept, tol));
        rows.extend(suite::limit_rows(&case, &swept, tol));
        rows.extend(suite::derivative_rows(&case, &swept, tol)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for kind in GeometryKind::ALL {
        for i in 0..cfg.random_cases {
            let case = suite::random_case(&mut rng, kind).named(format!("{}-random{i}", kind.name()));
            let alpha = suite::random_alpha(&mut rng);
            if domain.is_none_or(|d| d == kind.name()) {
                single_alpha(&case, alpha, &mut rows)?;
            }
        }
    }
    Ok(rows)
}

fn verify(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let rows = verify_rows(&ctx.cfg, ctx.opts.domain.as_deref())?;
    let summary = Summary::of(&rows);
    ctx.write("verify_rows.csv", &rows_to_csv(&rows))?;
    ctx.write("verify_summary.json", &report::to_json(&summary))?;
    let mut stdout = render_table(&rows);
    stdout.push_str(&format!(
        "{} rows: {} pass, {} exact, {} skipped, {} fail\n",
        summary.rows, summary.pass, summary.exact, summary.skipped, summary.fail
    ));
    for f in &summary.failures {
        stdout.push_str(&format!("FAIL {f}\n"));
    }
    Ok((stdout, !summary.all_pass))
}

#[derive(Serialize)]
struct ReportSummary {
    files: Vec<String>,
    summary: Summary,
}

fn aggregate(ctx: &mut Ctx) -> Result<(String, bool), CliError> {
    let dir = ctx.out.clone();
    let mut names = list_row_files(&dir)?;
    names.sort();
    if names.is_empty() {
        return Err(CliError::Usage(format!("no *_rows.csv files in {}", dir.display())));
    }
    let mut rows = Vec::new();
    for name in &names {
        let path = dir.join(name);
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
        rows.extend(rows_from_csv(&text, &path.display().to_string())?);
    }
    let summary = Summary::of(&rows);
    ctx.write("report.csv", &rows_to_csv(&rows))?;
    let doc = ReportSummary { files: names, summary };
    let text = report::to_json(&doc);
    ctx.write("summary.json", &text)?;
    Ok((text, false))
}

fn list_row_files(dir: &Path) -> Result<Vec<String>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut names = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| CliError::io(dir, e))?;
        if let Some(name) = entry.file_name().to_str() {
            if name.ends_with("_rows.csv") {
                names.push(name.to_string());
            }
        }
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variants_parse() {
        assert_eq!(parse_variant("dirichlet", 5.0).unwrap(), Variant::Dirichlet);
        assert_eq!(parse_variant("robin:250", 5.0).unwrap(), Variant::robin(250.0).unwrap());
        assert_eq!(parse_variant("robin", 5.0).unwrap(), Variant::robin(5.0).unwrap());
        for bad in ["neumann", "robin:", "robin:-3", "robin:x"] {
            assert_eq!(parse_variant(bad, 5.0).unwrap_err().exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn overrides_are_validated() {
        let opts = Options { n: Some(7), ..Options::default() };
        assert_eq!(resolve_config(&opts, &Command::Verify).unwrap_err().exit_code(), 2);
        // Odd sample counts are fine for `solve`.
        assert_eq!(resolve_config(&opts, &Command::Solve).unwrap().samples, 7);
    }
}
