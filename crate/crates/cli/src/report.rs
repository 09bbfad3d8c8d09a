//! Report rows and their CSV/JSON serialization.
//!
//! Numbers are written with 17 significant digits in exponent form, which
//! round-trips every `f64`; identical inputs therefore give byte-identical
//! files. CSV uses `,` and `\n` with a header row that never changes.

use std::fmt::{self, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::CliError;

/// A float serialized with 17 significant digits; non-finite values become
/// `NaN`/`inf` in CSV and `null` in JSON.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sci(pub f64);

impl fmt::Display for Sci {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_finite() {
            write!(f, "{:.16e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for Sci {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = serde_json::value::RawValue::from_string(self.to_string()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sci {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Sci(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

/// `|a − b| / max(|a|, |b|)`, zero when both vanish and NaN when either is.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    // `f64::max` drops a NaN operand, which would turn `(0, NaN)` into a pass.
    let scale = a.abs().max(b.abs());
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check holds identically (e.g. a vanishing gap), so no rate applies.
    Exact,
    Skipped,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Exact => "exact",
            Self::Skipped => "skipped",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Self::Pass),
            "fail" => Some(Self::Fail),
            "exact" => Some(Self::Exact),
            "skipped" => Some(Self::Skipped),
            _ => None,
        }
    }

    /// Pass when the measured gap is finite and within tolerance.
    pub fn judge(gap: f64, tolerance: f64) -> Self {
        if gap.is_finite() && gap <= tolerance {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Self::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One closed-form-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub domain: String,
    /// Control problem tag (`g`, `q`, `b`, `gq`) or `-` for field checks.
    pub problem: String,
    pub variant: String,
    pub quantity: String,
    pub closed_form: Sci,
    pub oracle: Sci,
    pub abs_gap: Sci,
    /// The gap the verdict is judged on.
    pub rel_gap: Sci,
    pub tolerance: Sci,
    pub verdict: Verdict,
}

impl ReportRow {
    /// Row judged on the relative gap between `closed_form` and `oracle`.
    pub fn compare(
        domain: &str,
        problem: &str,
        variant: &str,
        quantity: impl Into<String>,
        closed_form: f64,
        oracle: f64,
        tolerance: f64,
    ) -> Self {
        let rel = relative_gap(closed_form, oracle);
        Self::with_gap(domain, problem, variant, quantity, closed_form, oracle, rel, tolerance)
    }

    /// Row judged on an explicitly supplied gap measure.
    #[allow(clippy::too_many_arguments)]
    pub fn with_gap(
        domain: &str,
        problem: &str,
        variant: &str,
        quantity: impl Into<String>,
        closed_form: f64,
        oracle: f64,
        gap: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            domain: domain.into(),
            problem: problem.into(),
            variant: variant.into(),
            quantity: quantity.into(),
            closed_form: Sci(closed_form),
            oracle: Sci(oracle),
            abs_gap: Sci((closed_form - oracle).abs()),
            rel_gap: Sci(gap),
            tolerance: Sci(tolerance),
            verdict: Verdict::judge(gap, tolerance),
        }
    }

    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }
}

pub const REPORT_HEADER: [&str; 10] =
    ["domain", "problem", "variant", "quantity", "closed_form", "oracle", "abs_gap", "rel_gap", "tolerance", "verdict"];

/// A CSV document with a fixed header.
pub struct Csv {
    text: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut text = header.join(",");
        text.push('\n');
        Self { text, columns: header.len() }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: fmt::Display,
    {
        let mut n = 0;
        for (i, c) in cells.into_iter().enumerate() {
            if i > 0 {
                self.text.push(',');
            }
            write!(self.text, "{c}").expect("writing to a String cannot fail");
            n += 1;
        }
        debug_assert_eq!(n, self.columns, "row width differs from header");
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut csv = Csv::new(&REPORT_HEADER);
    for r in rows {
        csv.row([
            r.domain.clone(),
            r.problem.clone(),
            r.variant.clone(),
            r.quantity.clone(),
            r.closed_form.to_string(),
            r.oracle.to_string(),
            r.abs_gap.to_string(),
            r.rel_gap.to_string(),
            r.tolerance.to_string(),
            r.verdict.to_string(),
        ]);
    }
    csv.as_str().to_owned()
}

pub fn rows_from_csv(text: &str, path: &str) -> Result<Vec<ReportRow>, CliError> {
    let bad = |line: usize, message: String| CliError::Report { path: path.into(), message: format!("line {line}: {message}") };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad(1, "empty file".into()))?;
    if header != REPORT_HEADER.join(",") {
        return Err(bad(1, format!("unexpected header {header:?}")));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != REPORT_HEADER.len() {
            return Err(bad(lineno, format!("expected {} cells, found {}", REPORT_HEADER.len(), cells.len())));
        }
        let num = |j: usize| {
            cells[j]
                .parse::<f64>()
                .map(Sci)
                .map_err(|_| bad(lineno, format!("{} is not a number: {:?}", REPORT_HEADER[j], cells[j])))
        };
        rows.push(ReportRow {
            domain: cells[0].into(),
            problem: cells[1].into(),
            variant: cells[2].into(),
            quantity: cells[3].into(),
            closed_form: num(4)?,
            oracle: num(5)?,
            abs_gap: num(6)?,
            rel_gap: num(7)?,
            tolerance: num(8)?,
            verdict: Verdict::parse(cells[9]).ok_or_else(|| bad(lineno, format!("unknown verdict {:?}", cells[9])))?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub exact: usize,
    pub skipped: usize,
    pub all_pass: bool,
    /// `domain/problem/variant/quantity` of each failing row, in row order.
    pub failures: Vec<String>,
}

impl Summary {
    pub fn of(rows: &[ReportRow]) -> Self {
        let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
        let failures: Vec<String> = rows
            .iter()
            .filter(|r| r.verdict.is_failure())
            .map(|r| format!("{}/{}/{}/{}", r.domain, r.problem, r.variant, r.quantity))
            .collect();
        Self {
            rows: rows.len(),
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            exact: count(Verdict::Exact),
            skipped: count(Verdict::Skipped),
            all_pass: failures.is_empty(),
            failures,
        }
    }
}

/// Aligned plain-text table of the rows.
pub fn render_table(rows: &[ReportRow]) -> String {
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.domain.clone(),
                r.problem.clone(),
                r.variant.clone(),
                r.quantity.clone(),
                format!("{:.3e}", r.rel_gap.0),
                format!("{:.1e}", r.tolerance.0),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let header = ["domain", "problem", "variant", "quantity", "gap", "tol", "verdict"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |row: &[String]| {
        let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &cells {
        line(row);
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE] {
            let s = Sci(x).to_string();
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let mantissa = s.split('e').next().unwrap().trim_start_matches('-').replace('.', "");
            assert_eq!(mantissa.len(), 17, "{s}");
        }
    }

    #[test]
    fn json_numbers_keep_their_digits() {
        assert_eq!(serde_json::to_string(&Sci(0.5)).unwrap(), "5.0000000000000000e-1");
        assert_eq!(serde_json::to_string(&Sci(f64::NAN)).unwrap(), "null");
    }

    #[test]
    fn verdict_is_a_function_of_gap_and_tolerance() {
        assert_eq!(Verdict::judge(1e-9, 1e-8), Verdict::Pass);
        assert_eq!(Verdict::judge(1e-8, 1e-8), Verdict::Pass);
        assert_eq!(Verdict::judge(2e-8, 1e-8), Verdict::Fail);
        assert_eq!(Verdict::judge(f64::NAN, 1.0), Verdict::Fail);
    }

    #[test]
    fn nan_never_passes() {
        assert!(relative_gap(0.0, f64::NAN).is_nan());
        assert_eq!(ReportRow::compare("shell", "-", "dirichlet", "L3", 0.0, f64::NAN, 1.0).verdict, Verdict::Fail);
        assert_eq!(relative_gap(0.0, 0.0), 0.0);
    }

    #[test]
    fn csv_round_trip() {
        let rows = vec![
            ReportRow::compare("annulus", "g", "robin:100", "control", 1.25, 1.25 + 1e-12, 1e-8),
            ReportRow::compare("shell", "-", "dirichlet", "L3", 0.0, f64::NAN, 1e-3),
        ];
        let text = rows_to_csv(&rows);
        assert!(text.starts_with("domain,problem,variant,quantity,closed_form"));
        let back = rows_from_csv(&text, "mem").unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0], rows[0]);
        assert!(back[1].oracle.0.is_nan());
        assert_eq!(back[1].verdict, Verdict::Fail);
    }

    #[test]
    fn malformed_csv_names_the_line() {
        let text = format!("{}\nshell,-,dirichlet\n", REPORT_HEADER.join(","));
        assert!(rows_from_csv(&text, "x.csv").unwrap_err().to_string().contains("line 2"));
    }
}
