//! Optimal controls and optimal values of the four control problems.
//!
//! Every cost is a quadratic in its control. Two routes are kept apart:
//!
//! * the closed forms ([`theorem_scalar`], [`theorem_pair`]) written in the
//!   normalized variables of the optimality theorems, with the regularization
//!   folded into the leading coefficient (`C1 + M1/x0⁴`, `E1 + E3 M1/r1⁴`, ...);
//! * [`cost_quadratic`] / [`pair_cost_quadratic`], assembled from the raw
//!   misfit expansion plus `M/2 · control² · measure`.
//!
//! `optimal_*` report the closed form; the quadratic forms feed the SPD solve
//! and the self-consistency checks.

use std::f64::consts::PI;
use std::fmt;

use crate::coefficients::{coefficients, coefficients_for, half_squared_misfit, monomials};
use crate::error::{BenchError, Result};
use crate::problem::{DomainGeometry, ProblemData, Variant};
use crate::scalar::{lift, Real};

/// Which datum acts as the control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ControlKind {
    /// Internal energy `g`, cost `J1`.
    Distributed,
    /// Flux `q` on `Γ2`, cost `J2`.
    Flux,
    /// Temperature `b` on `Γ1`, cost `J3`.
    Temperature,
    /// The pair `(g, q)`, cost `J4`.
    Simultaneous,
}

impl ControlKind {
    pub const ALL: [ControlKind; 4] = [Self::Distributed, Self::Flux, Self::Temperature, Self::Simultaneous];

    /// Short CLI tag: `g`, `q`, `b` or `gq`.
    pub fn tag(self) -> &'static str {
        match self {
            Self::Distributed => "g",
            Self::Flux => "q",
            Self::Temperature => "b",
            Self::Simultaneous => "gq",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }

    /// Name of the associated cost functional.
    pub fn cost_name(self) -> &'static str {
        match self {
            Self::Distributed => "J1",
            Self::Flux => "J2",
            Self::Temperature => "J3",
            Self::Simultaneous => "J4",
        }
    }
}

impl fmt::Display for ControlKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `J(v) = a v² + b v + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCost {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl QuadraticCost {
    pub fn eval(&self, v: f64) -> f64 {
        (self.a * v + self.b) * v + self.c
    }

    pub fn argmin(&self) -> f64 {
        -self.b / (2.0 * self.a)
    }

    pub fn min_value(&self) -> f64 {
        self.c - self.b * self.b / (4.0 * self.a)
    }
}

/// `J(g, q) = agg g² + aqq q² + agq g q + bg g + bq q + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairQuadraticCost {
    pub agg: f64,
    pub aqq: f64,
    pub agq: f64,
    pub bg: f64,
    pub bq: f64,
    pub c: f64,
}

impl PairQuadraticCost {
    pub fn eval(&self, g: f64, q: f64) -> f64 {
        self.agg * g * g + self.aqq * q * q + self.agq * g * q + self.bg * g + self.bq * q + self.c
    }

    /// Stationary point from the 2×2 normal equations
    /// `[2agg agq; agq 2aqq] (g, q) = −(bg, bq)`.
    pub fn solve(&self) -> Result<(f64, f64)> {
        let det = 4.0 * self.agg * self.aqq - self.agq * self.agq;
        if !(self.agg > 0.0 && det > 0.0) {
            return Err(BenchError::Inconsistent(format!(
                "pair cost is not positive definite: agg = {}, det = {det}",
                self.agg
            )));
        }
        let g = (-2.0 * self.aqq * self.bg + self.agq * self.bq) / det;
        let q = (self.agq * self.bg - 2.0 * self.agg * self.bq) / det;
        Ok((g, q))
    }
}

/// Value of a scalar control or a `(g, q)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ControlValue {
    Scalar(f64),
    Pair(f64, f64),
}

impl ControlValue {
    pub fn components(&self) -> Vec<f64> {
        match *self {
            Self::Scalar(v) => vec![v],
            Self::Pair(g, q) => vec![g, q],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlSolution {
    pub kind: ControlKind,
    pub control: ControlValue,
    /// Closed-form optimal value.
    pub cost: f64,
    pub variant: Variant,
    /// For the pair problem, the minimizer from the SPD solve on the
    /// assembled quadratic form.
    pub spd_control: Option<(f64, f64)>,
}

/// Normalization of one geometry: the misfit is
/// `scale · Σ kᵢ · (monomial in G = g·source_unit, Q = q·flux_unit, d)`.
struct Normalization {
    scale: f64,
    source_unit: f64,
    flux_unit: f64,
}

fn normalization(geom: &DomainGeometry) -> Normalization {
    match *geom {
        DomainGeometry::Rectangle { x0, y0 } => Normalization { scale: x0 * y0 / 2.0, source_unit: x0 * x0, flux_unit: x0 },
        DomainGeometry::Annulus { r1, .. } => Normalization { scale: PI * r1 * r1, source_unit: r1 * r1, flux_unit: r1 },
        DomainGeometry::Shell { r1, r2 } => {
            Normalization { scale: 2.0 * PI * r1.powi(3), source_unit: r1 * r1, flux_unit: r2 * r2 / r1 }
        }
    }
}

/// Regularization added to the `g²` coefficient in normalized form.
fn source_penalty<T: Real>(geom: &DomainGeometry, k3: T, m: f64) -> T {
    match *geom {
        DomainGeometry::Rectangle { x0, .. } => lift(m / x0.powi(4)),
        DomainGeometry::Annulus { r1, .. } | DomainGeometry::Shell { r1, .. } => k3 * (m / r1.powi(4)),
    }
}

fn flux_penalty(geom: &DomainGeometry, m: f64) -> f64 {
    match *geom {
        DomainGeometry::Rectangle { x0, .. } => m / x0.powi(3),
        DomainGeometry::Annulus { r1, r2 } => m * r2 / r1.powi(4),
        DomainGeometry::Shell { r1, r2 } => m / (r1 * r2 * r2),
    }
}

fn temperature_penalty(geom: &DomainGeometry, m: f64) -> f64 {
    m / geom.robin_length()
}

/// Closed-form optimal scalar control and optimal value at `1/α = inv_alpha`.
///
/// Generic so the dual-number route can differentiate it in `1/α`.
pub fn theorem_scalar<T: Real>(
    geom: &DomainGeometry,
    data: &ProblemData,
    kind: ControlKind,
    inv_alpha: T,
) -> Result<(T, T)> {
    let set = coefficients(geom, inv_alpha);
    let [k1, k2, k3, k4, k5, k6] = set.k;
    let n = normalization(geom);
    let big_g = data.g * n.source_unit;
    let big_q = data.q * n.flux_unit;
    let d = data.offset();
    let z = data.z_d;
    let out = match kind {
        ControlKind::Distributed => {
            let lead = k1 + source_penalty(geom, k3, data.m[0]);
            let lin = k4 * big_q + k5 * d;
            let control = -lin / (lead * 2.0) / n.source_unit;
            let rest = k2 * (big_q * big_q) + k3 * (d * d) + k6 * (big_q * d);
            let value = (lead * rest * 4.0 - lin * lin) * n.scale / (lead * 4.0);
            (control, value)
        }
        ControlKind::Flux => {
            let lead = k2 + flux_penalty(geom, data.m[1]);
            let lin = k4 * big_g + k6 * d;
            let control = -lin / (lead * 2.0) / n.flux_unit;
            let rest = k1 * (big_g * big_g) + k3 * (d * d) + k5 * (big_g * d);
            let value = (lead * rest * 4.0 - lin * lin) * n.scale / (lead * 4.0);
            (control, value)
        }
        ControlKind::Temperature => {
            let lead = k3 + temperature_penalty(geom, data.m[2]);
            let lin = k5 * big_g + k6 * big_q - k3 * (2.0 * z);
            let control = -lin / (lead * 2.0);
            let rest = k1 * (big_g * big_g) + k2 * (big_q * big_q) + k3 * (z * z) + k4 * (big_g * big_q)
                - k5 * (big_g * z)
                - k6 * (big_q * z);
            let value = (lead * rest * 4.0 - lin * lin) * n.scale / (lead * 4.0);
            (control, value)
        }
        ControlKind::Simultaneous => {
            return Err(BenchError::Argument("the simultaneous problem has a pair control".into()));
        }
    };
    Ok(out)
}

/// Closed-form `(g, q)` optimum via the `Δ`/`Π` ratios and its optimal value.
pub fn theorem_pair<T: Real>(geom: &DomainGeometry, data: &ProblemData, inv_alpha: T) -> Result<((T, T), T)> {
    let set = coefficients(geom, inv_alpha);
    let [k1, k2, k3, k4, k5, k6] = set.k;
    let n = normalization(geom);
    let d = data.offset();
    let lead_g = k1 + source_penalty(geom, k3, data.m[3]);
    let lead_q = k2 + flux_penalty(geom, data.m[4]);
    let den = lead_g * lead_q * 4.0 - k4 * k4;
    if !(den > 0.0) {
        return Err(BenchError::Inconsistent(format!("Δ/Π denominator is not positive: {den}")));
    }
    let delta = (k4 * k6 - k5 * lead_q * 2.0) / den;
    let pi = (k4 * k5 - k6 * lead_g * 2.0) / den;
    let g = delta * (d / n.source_unit);
    let q = pi * (d / n.flux_unit);
    let bracket = k3 * lead_g * lead_q * 4.0 - k6 * k6 * lead_g - k5 * k5 * lead_q - k3 * k4 * k4 + k4 * k5 * k6;
    let value = bracket * (n.scale * d * d) / den;
    Ok(((g, q), value))
}

/// Quadratic form of `J1`, `J2` or `J3` in its raw control, built from the
/// misfit expansion and the domain measures.
pub fn cost_quadratic(
    geom: &DomainGeometry,
    data: &ProblemData,
    kind: ControlKind,
    variant: Variant,
) -> Result<QuadraticCost> {
    let k = coefficients_for(geom, variant).k;
    let mo = monomials(geom);
    let c: [f64; 6] = std::array::from_fn(|i| k[i] * mo[i]);
    let meas = geom.measures();
    let (g, q, d, z) = (data.g, data.q, data.offset(), data.z_d);
    let form = match kind {
        ControlKind::Distributed => QuadraticCost {
            a: c[0] + 0.5 * data.m[0] * meas.volume,
            b: c[3] * q + c[4] * d,
            c: c[1] * q * q + c[2] * d * d + c[5] * q * d,
        },
        ControlKind::Flux => QuadraticCost {
            a: c[1] + 0.5 * data.m[1] * meas.area_gamma2,
            b: c[3] * g + c[5] * d,
            c: c[0] * g * g + c[2] * d * d + c[4] * g * d,
        },
        ControlKind::Temperature => QuadraticCost {
            a: c[2] + 0.5 * data.m[2] * meas.area_gamma1,
            b: c[4] * g + c[5] * q - 2.0 * c[2] * z,
            c: c[0] * g * g + c[1] * q * q + c[2] * z * z + c[3] * g * q - c[4] * g * z - c[5] * q * z,
        },
        ControlKind::Simultaneous => {
            return Err(BenchError::Argument("use pair_cost_quadratic for the simultaneous problem".into()));
        }
    };
    if !(form.a > 0.0) {
        return Err(BenchError::Inconsistent(format!("{} is not strictly convex: a = {}", kind.cost_name(), form.a)));
    }
    Ok(form)
}

/// Quadratic form of `J4` in `(g, q)`.
pub fn pair_cost_quadratic(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<PairQuadraticCost> {
    let k = coefficients_for(geom, variant).k;
    let mo = monomials(geom);
    let c: [f64; 6] = std::array::from_fn(|i| k[i] * mo[i]);
    let meas = geom.measures();
    let d = data.offset();
    Ok(PairQuadraticCost {
        agg: c[0] + 0.5 * data.m[3] * meas.volume,
        aqq: c[1] + 0.5 * data.m[4] * meas.area_gamma2,
        agq: c[3],
        bg: c[4] * d,
        bq: c[5] * d,
        c: c[2] * d * d,
    })
}

fn scalar_solution(geom: &DomainGeometry, data: &ProblemData, kind: ControlKind, variant: Variant) -> Result<ControlSolution> {
    data.validate()?;
    let (control, cost) = theorem_scalar(geom, data, kind, variant.inv_alpha())?;
    Ok(ControlSolution { kind, control: ControlValue::Scalar(control), cost, variant, spd_control: None })
}

pub fn optimal_distributed(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<ControlSolution> {
    scalar_solution(geom, data, ControlKind::Distributed, variant)
}

pub fn optimal_flux(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<ControlSolution> {
    scalar_solution(geom, data, ControlKind::Flux, variant)
}

pub fn optimal_temperature(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<ControlSolution> {
    scalar_solution(geom, data, ControlKind::Temperature, variant)
}

/// Pair optimum from the `Δ`/`Π` ratios, cross-checked by the SPD solve.
pub fn optimal_simultaneous(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<ControlSolution> {
    data.validate()?;
    let ((g, q), cost) = theorem_pair(geom, data, variant.inv_alpha())?;
    let spd = pair_cost_quadratic(geom, data, variant)?.solve()?;
    Ok(ControlSolution {
        kind: ControlKind::Simultaneous,
        control: ControlValue::Pair(g, q),
        cost,
        variant,
        spd_control: Some(spd),
    })
}

pub fn optimal_control(
    geom: &DomainGeometry,
    data: &ProblemData,
    kind: ControlKind,
    variant: Variant,
) -> Result<ControlSolution> {
    match kind {
        ControlKind::Simultaneous => optimal_simultaneous(geom, data, variant),
        _ => scalar_solution(geom, data, kind, variant),
    }
}

/// Cost at an arbitrary control: the control overrides its data field, the
/// tracking misfit comes from [`half_squared_misfit`] and the penalty uses the
/// measure of the set the control lives on.
pub fn evaluate_cost(
    geom: &DomainGeometry,
    data: &ProblemData,
    kind: ControlKind,
    control: ControlValue,
    variant: Variant,
) -> Result<f64> {
    let meas = geom.measures();
    let (state_data, penalty) = match (kind, control) {
        (ControlKind::Distributed, ControlValue::Scalar(g)) => (data.with_g(g), 0.5 * data.m[0] * g * g * meas.volume),
        (ControlKind::Flux, ControlValue::Scalar(q)) => (data.with_q(q), 0.5 * data.m[1] * q * q * meas.area_gamma2),
        (ControlKind::Temperature, ControlValue::Scalar(b)) => {
            (data.with_b(b), 0.5 * data.m[2] * b * b * meas.area_gamma1)
        }
        (ControlKind::Simultaneous, ControlValue::Pair(g, q)) => (
            data.with_g(g).with_q(q),
            0.5 * data.m[3] * g * g * meas.volume + 0.5 * data.m[4] * q * q * meas.area_gamma2,
        ),
        _ => {
            return Err(BenchError::Argument(format!("control value {control:?} does not fit problem {kind}")));
        }
    };
    Ok(half_squared_misfit(geom, &state_data, variant)? + penalty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_square() -> DomainGeometry {
        DomainGeometry::rectangle(1.0, 1.0).unwrap()
    }

    #[test]
    fn unit_square_distributed() {
        let data = ProblemData::new(0.0, 1.0, 0.3, 0.3, [1.0; 5]).unwrap();
        let sol = optimal_distributed(&unit_square(), &data, Variant::Dirichlet).unwrap();
        assert_relative_eq!(sol.control.components()[0], 25.0 / 136.0, max_relative = 1e-14);
    }

    #[test]
    fn unit_square_flux_form_and_optimum() {
        let data = ProblemData::new(0.0, 0.0, 1.0, 0.0, [1.0; 5]).unwrap();
        let form = cost_quadratic(&unit_square(), &data, ControlKind::Flux, Variant::Dirichlet).unwrap();
        for v in [-1.0, 0.0, 1.0] {
            let expected = 0.5 * ((1.0 / 3.0 + 1.0) * v * v - v + 1.0);
            assert_relative_eq!(form.eval(v), expected, max_relative = 1e-14);
            let direct =
                evaluate_cost(&unit_square(), &data, ControlKind::Flux, ControlValue::Scalar(v), Variant::Dirichlet)
                    .unwrap();
            assert_relative_eq!(direct, expected, max_relative = 1e-14);
        }
        let sol = optimal_flux(&unit_square(), &data, Variant::Dirichlet).unwrap();
        assert_relative_eq!(sol.control.components()[0], 3.0 / 8.0, max_relative = 1e-14);
    }

    #[test]
    fn unit_square_temperature() {
        let data = ProblemData::new(0.0, 0.0, 5.0, 0.8, [1.0; 5]).unwrap();
        let sol = optimal_temperature(&unit_square(), &data, Variant::Dirichlet).unwrap();
        assert_relative_eq!(sol.control.components()[0], 0.4, max_relative = 1e-14);
    }

    #[test]
    fn balanced_data_gives_zero_controls() {
        let data = ProblemData::new(0.0, 0.0, 0.5, 0.5, [1.0; 5]).unwrap();
        for geom in [unit_square(), DomainGeometry::annulus(1.0, 2.0).unwrap(), DomainGeometry::shell(1.0, 2.0).unwrap()] {
            for kind in [ControlKind::Distributed, ControlKind::Flux, ControlKind::Simultaneous] {
                let sol = optimal_control(&geom, &data, kind, Variant::Dirichlet).unwrap();
                assert!(sol.control.components().iter().all(|v| *v == 0.0));
                assert_eq!(sol.cost, 0.0);
            }
        }
    }

    #[test]
    fn pair_routes_agree() {
        let data = ProblemData::new(0.2, -0.4, 1.0, 0.0, [1.0; 5]).unwrap();
        let geom = DomainGeometry::shell(1.0, 2.0).unwrap();
        let sol = optimal_simultaneous(&geom, &data, Variant::robin(7.0).unwrap()).unwrap();
        let ControlValue::Pair(g, q) = sol.control else { panic!() };
        let (sg, sq) = sol.spd_control.unwrap();
        assert_relative_eq!(g, sg, max_relative = 1e-12);
        assert_relative_eq!(q, sq, max_relative = 1e-12);
    }

    #[test]
    fn mismatched_control_is_rejected() {
        let data = ProblemData::new(0.0, 0.0, 0.0, 0.0, [1.0; 5]).unwrap();
        let err = evaluate_cost(&unit_square(), &data, ControlKind::Flux, ControlValue::Pair(0.0, 0.0), Variant::Dirichlet);
        assert!(matches!(err, Err(BenchError::Argument(_))));
    }
}
