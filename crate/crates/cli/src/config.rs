//! JSON run configuration.
//!
//! Every object rejects unknown keys, and every field except the problem list
//! has a default, so `{}` is a valid config. Parse errors carry the line and
//! column from the JSON reader; validation errors name the offending field.

use std::path::{Path, PathBuf};

use ocbench_core::{DomainGeometry, ProblemData};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum DomainSpec {
    Rectangle { x0: f64, y0: f64 },
    Annulus { r1: f64, r2: f64 },
    Shell { r1: f64, r2: f64 },
}

impl DomainSpec {
    pub fn geometry(&self) -> ocbench_core::Result<DomainGeometry> {
        match *self {
            Self::Rectangle { x0, y0 } => DomainGeometry::rectangle(x0, y0),
            Self::Annulus { r1, r2 } => DomainGeometry::annulus(r1, r2),
            Self::Shell { r1, r2 } => DomainGeometry::shell(r1, r2),
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Self::Rectangle { .. } => "rectangle",
            Self::Annulus { .. } => "annulus",
            Self::Shell { .. } => "shell",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataSpec {
    pub g: f64,
    pub q: f64,
    pub b: f64,
    pub z_d: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Regularization {
    #[serde(rename = "M1")]
    pub m1: f64,
    #[serde(rename = "M2")]
    pub m2: f64,
    #[serde(rename = "M3")]
    pub m3: f64,
    #[serde(rename = "M4")]
    pub m4: f64,
    #[serde(rename = "M5")]
    pub m5: f64,
}

/// One geometry with its data, as consumed by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDescriptor {
    pub domain: DomainSpec,
    pub data: DataSpec,
    pub regularization: Regularization,
}

impl ProblemDescriptor {
    pub fn geometry(&self) -> ocbench_core::Result<DomainGeometry> {
        self.domain.geometry()
    }

    pub fn problem_data(&self) -> ocbench_core::Result<ProblemData> {
        let r = &self.regularization;
        ProblemData::new(self.data.g, self.data.q, self.data.b, self.data.z_d, [r.m1, r.m2, r.m3, r.m4, r.m5])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaGrid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default = "default_spacing")]
    pub spacing: Spacing,
}

fn default_spacing() -> Spacing {
    Spacing::Geometric
}

impl Default for AlphaGrid {
    fn default() -> Self {
        Self { start: 1e2, stop: 1e6, points: 8, spacing: Spacing::Geometric }
    }
}

impl AlphaGrid {
    pub fn values(&self) -> ocbench_core::Result<Vec<f64>> {
        match self.spacing {
            Spacing::Geometric => ocbench_core::geometric_grid(self.start, self.stop, self.points),
        }
    }
}

/// Tolerances, all relative unless noted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Closed-form value against the same quantity assembled another way.
    pub self_consistency: f64,
    /// Closed form against a numeric oracle (minimizers, SPD solve, dual route).
    pub oracle: f64,
    /// Extrapolated `α·gap` against a limit constant.
    pub limit: f64,
    /// Boundary residuals of the closed-form fields.
    pub residual: f64,
    /// Misfit table against quadrature of the closed-form state.
    pub quadrature: f64,
    /// Gradient at the optimum, relative to `1 + |J|`.
    pub gradient: f64,
    pub fd_ratio_min: f64,
    pub fd_ratio_max: f64,
    /// Allowed `|slope + 1|` of the log-log fit.
    pub slope: f64,
    /// Exact rectangle gap identity, closed form.
    pub gap_identity: f64,
    /// Exact rectangle gap identity, by quadrature.
    pub gap_identity_quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            self_consistency: 1e-10,
            oracle: 1e-8,
            limit: 1e-3,
            residual: 1e-12,
            quadrature: 1e-9,
            gradient: 1e-6,
            fd_ratio_min: 3.5,
            fd_ratio_max: 4.5,
            slope: 0.05,
            gap_identity: 1e-12,
            gap_identity_quadrature: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BenchConfig {
    pub problems: Vec<ProblemDescriptor>,
    pub alpha_grid: AlphaGrid,
    /// Robin coefficient for the single-α checks.
    pub alpha: f64,
    /// Finite-difference intervals on the coarse grid; the fine grid doubles it.
    pub n: usize,
    /// Sample points written by `solve`.
    pub samples: usize,
    /// Seeded random inputs per domain added to `verify`.
    pub random_cases: usize,
    pub seed: u64,
    pub output_dir: PathBuf,
    pub tolerances: Tolerances,
}

impl Default for BenchConfig {
    fn default() -> Self {
        let data = DataSpec { g: 1.0, q: 2.0, b: 1.0, z_d: 0.25 };
        let reg = Regularization { m1: 1.0, m2: 1.0, m3: 1.0, m4: 2.0, m5: 2.0 };
        let problem = |domain| ProblemDescriptor { domain, data: data.clone(), regularization: reg.clone() };
        Self {
            problems: vec![
                problem(DomainSpec::Rectangle { x0: 1.0, y0: 1.0 }),
                problem(DomainSpec::Annulus { r1: 1.0, r2: 2.0 }),
                problem(DomainSpec::Shell { r1: 1.0, r2: 2.0 }),
            ],
            alpha_grid: AlphaGrid::default(),
            alpha: 100.0,
            n: 64,
            samples: 101,
            random_cases: 5,
            seed: 20_240_501,
            output_dir: PathBuf::from("ocbench-out"),
            tolerances: Tolerances::default(),
        }
    }
}

impl BenchConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| CliError::Config {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config { location: path.display().to_string(), message: e.to_string() })?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config { location, message } => {
                CliError::Config { location: format!("{}: {location}", path.display()), message }
            }
            other => other,
        })
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |field: String, message: String| Err(CliError::Config { location: field, message });
        if self.problems.is_empty() {
            return bad("problems".into(), "at least one problem is required".into());
        }
        for (i, p) in self.problems.iter().enumerate() {
            if let Err(e) = p.geometry() {
                return bad(format!("problems[{i}].domain"), e.to_string());
            }
            if let Err(e) = p.problem_data() {
                return bad(format!("problems[{i}]"), e.to_string());
            }
        }
        let g = &self.alpha_grid;
        if !(g.start > 0.0 && g.start < g.stop && g.stop.is_finite()) {
            return bad("alpha_grid".into(), format!("need 0 < start < stop, got start = {}, stop = {}", g.start, g.stop));
        }
        if g.points < 4 {
            return bad("alpha_grid.points".into(), format!("must be at least 4, got {}", g.points));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return bad("alpha".into(), format!("must be positive and finite, got {}", self.alpha));
        }
        if self.n < 8 || !self.n.is_multiple_of(2) {
            return bad("n".into(), format!("must be even and at least 8, got {}", self.n));
        }
        if self.samples < 2 {
            return bad("samples".into(), format!("must be at least 2, got {}", self.samples));
        }
        let t = &self.tolerances;
        let named = [
            ("self_consistency", t.self_consistency),
            ("oracle", t.oracle),
            ("limit", t.limit),
            ("residual", t.residual),
            ("quadrature", t.quadrature),
            ("gradient", t.gradient),
            ("fd_ratio_min", t.fd_ratio_min),
            ("fd_ratio_max", t.fd_ratio_max),
            ("slope", t.slope),
            ("gap_identity", t.gap_identity),
            ("gap_identity_quadrature", t.gap_identity_quadrature),
        ];
        for (name, v) in named {
            if !(v > 0.0 && v.is_finite()) {
                return bad(format!("tolerances.{name}"), format!("must be positive, got {v}"));
            }
        }
        if t.fd_ratio_min >= t.fd_ratio_max {
            return bad("tolerances.fd_ratio_min".into(), "must be below fd_ratio_max".into());
        }
        Ok(())
    }

    /// Problems whose domain type is `domain`, or all of them.
    pub fn select(&self, domain: Option<&str>) -> Result<Vec<&ProblemDescriptor>, CliError> {
        let chosen: Vec<_> = self.problems.iter().filter(|p| domain.is_none_or(|d| p.domain.type_name() == d)).collect();
        if chosen.is_empty() {
            return Err(CliError::Usage(format!("no configured problem has domain {}", domain.unwrap_or("?"))));
        }
        Ok(chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_object_is_the_default() {
        assert_eq!(BenchConfig::from_json("{}").unwrap(), BenchConfig::default());
    }

    #[test]
    fn default_round_trips() {
        let text = serde_json::to_string_pretty(&BenchConfig::default()).unwrap();
        assert_eq!(BenchConfig::from_json(&text).unwrap(), BenchConfig::default());
    }

    #[test]
    fn unknown_key_names_the_field_and_line() {
        let err = BenchConfig::from_json("{\n  \"alpha\": 10,\n  \"alhpa_grid\": {}\n}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
        assert!(msg.contains("alhpa_grid"), "{msg}");
    }

    #[test]
    fn unknown_domain_key_is_rejected() {
        let text = r#"{"problems": [{"domain": {"type": "annulus", "r1": 1, "r2": 2, "r3": 3},
            "data": {"g": 1, "q": 1, "b": 1, "z_d": 0},
            "regularization": {"M1": 1, "M2": 1, "M3": 1, "M4": 1, "M5": 1}}]}"#;
        assert!(BenchConfig::from_json(text).unwrap_err().to_string().contains("r3"));
    }

    #[test]
    fn invalid_values_name_the_field() {
        let msg = BenchConfig::from_json(r#"{"alpha_grid": {"start": 1, "stop": 10, "points": 3}}"#).unwrap_err().to_string();
        assert!(msg.contains("alpha_grid.points"), "{msg}");
        let text = r#"{"problems": [{"domain": {"type": "shell", "r1": 2, "r2": 1},
            "data": {"g": 1, "q": 1, "b": 1, "z_d": 0},
            "regularization": {"M1": 1, "M2": 1, "M3": 1, "M4": 1, "M5": 1}}]}"#;
        assert!(BenchConfig::from_json(text).unwrap_err().to_string().contains("problems[0].domain"));
    }
}
