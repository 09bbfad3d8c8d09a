//! Closed-form versus oracle checks, shared by `verify` and the acceptance
//! suite. Each check returns report rows and never panics on a mismatch.

use ocbench_core::coefficients::coefficients;
use ocbench_core::control::theorem_pair;
use ocbench_core::limits::{all_limits, derivative_limit, state_gap_constant};
use ocbench_core::oracle::{minimize_pair_quadratic, minimize_scalar_quadratic, solve_adjoint, solve_bvp, weighted_l2};
use ocbench_core::profile::{boundary_residuals, profile_for, state};
use ocbench_core::{
    alpha_sweep, dirichlet_coefficients, evaluate_cost, fit_order, half_squared_misfit, optimal_control, ControlKind,
    ControlValue, DomainGeometry, FieldKind, GeometryKind, LimitConstant, OrderFit, ProblemData, Quantity, Variant,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::report::{relative_gap, ReportRow, Verdict};

/// One geometry with its data and a display name for the report.
#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub geom: DomainGeometry,
    pub data: ProblemData,
}

impl Case {
    pub fn new(geom: DomainGeometry, data: ProblemData) -> Self {
        Self { name: geom.kind().name().to_string(), geom, data }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Quadrature nodes for the misfit audit; Simpson's error is far below the
/// tolerance at this size for every admissible geometry.
const MISFIT_QUADRATURE_NODES: usize = 512;

/// FD errors below this fraction of the field size are rounding, i.e. the
/// stencil reproduces the field.
const FD_EXACT: f64 = 1e-10;

fn field_name(field: FieldKind) -> &'static str {
    match field {
        FieldKind::State => "state",
        FieldKind::Adjoint => "adjoint",
    }
}

/// Boundary residuals of the state and adjoint, Dirichlet and Robin.
pub fn residual_rows(case: &Case, alpha: f64, tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
        for field in [FieldKind::State, FieldKind::Adjoint] {
            let r = boundary_residuals(&profile_for(&case.geom, &case.data, field, variant), 16).boundary_max();
            rows.push(ReportRow::with_gap(
                &case.name,
                "-",
                &variant.label(),
                format!("residual:{}", field_name(field)),
                0.0,
                r,
                r,
                tol.residual,
            ));
        }
    }
    Ok(rows)
}

/// Max FD error on `n` and `2n` intervals; the ratio should be near 4.
pub fn fd_ratio_rows(case: &Case, alpha: f64, n: usize, tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    let mid = (tol.fd_ratio_min + tol.fd_ratio_max) / 2.0;
    let half_width = (tol.fd_ratio_max - tol.fd_ratio_min) / 2.0;
    for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
        for field in [FieldKind::State, FieldKind::Adjoint] {
            let exact = profile_for(&case.geom, &case.data, field, variant);
            let err = |m: usize| -> ocbench_core::Result<(f64, f64)> {
                let fd = match field {
                    FieldKind::State => solve_bvp(&case.geom, &case.data, variant, None, m)?,
                    FieldKind::Adjoint => solve_adjoint(&case.geom, &case.data, variant, m)?,
                };
                let size = fd.grid.nodes.iter().map(|&t| exact.value(t).abs()).fold(0.0, f64::max);
                Ok((fd.max_error(|t| exact.value(t)), size))
            };
            let ((coarse, size), (fine, _)) = (err(n)?, err(2 * n)?);
            let ratio = coarse / fine;
            let quantity = format!("fd_ratio:{}", field_name(field));
            let row = ReportRow::with_gap(
                &case.name,
                "-",
                &variant.label(),
                quantity,
                mid,
                ratio,
                (ratio - mid).abs(),
                half_width,
            );
            let exact_fit = coarse <= FD_EXACT * size.max(f64::MIN_POSITIVE) && fine <= FD_EXACT * size.max(f64::MIN_POSITIVE);
            rows.push(if exact_fit { row.with_verdict(Verdict::Exact) } else { row });
        }
    }
    Ok(rows)
}

/// Misfit table against quadrature of the closed-form state.
pub fn misfit_rows(case: &Case, alpha: f64, tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for variant in [Variant::Dirichlet, Variant::robin(alpha)?] {
        let u = profile_for(&case.geom, &case.data, FieldKind::State, variant);
        let z = case.data.z_d;
        let quad = 0.5 * weighted_l2(&case.geom, |t| u.value(t) - z, MISFIT_QUADRATURE_NODES);
        let table = half_squared_misfit(&case.geom, &case.data, variant)?;
        rows.push(ReportRow::compare(&case.name, "-", &variant.label(), "half_misfit", table, quad, tol.quadrature));
    }
    Ok(rows)
}

/// The Dirichlet rectangle table and the α-independence of the third
/// coefficient, both exact.
pub fn coefficient_table_rows(case: &Case, alphas: &[f64]) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    if case.geom.kind() == GeometryKind::Rectangle {
        let expected = [2.0 / 15.0, 1.0 / 3.0, 1.0, -5.0 / 12.0, 2.0 / 3.0, -1.0];
        let got = dirichlet_coefficients(&case.geom).k;
        for i in 0..6 {
            let gap = (expected[i] - got[i]).abs();
            rows.push(ReportRow::with_gap(&case.name, "-", "dirichlet", format!("k{}", i + 1), expected[i], got[i], gap, 0.0));
        }
    }
    let k3 = dirichlet_coefficients(&case.geom).k3();
    for &a in alphas {
        let k3a = coefficients(&case.geom, 1.0 / a).k[2];
        let label = Variant::robin(a).map(|v| v.label()).unwrap_or_default();
        rows.push(ReportRow::with_gap(&case.name, "-", &label, "k3_invariance", k3, k3a, (k3 - k3a).abs(), 0.0));
    }
    rows
}

/// Probe scale for the minimizers: `max(1, |data|)`.
fn probe_scale(data: &ProblemData) -> f64 {
    [1.0, data.g.abs(), data.q.abs(), data.b.abs(), data.z_d.abs()].into_iter().fold(0.0, f64::max)
}

/// Closed-form optimum against the quadratic-fit minimizer, the cost at the
/// optimum, and the gradient there, for all four problems.
pub fn optimal_rows(case: &Case, variant: Variant, tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let (geom, data) = (&case.geom, &case.data);
    let label = variant.label();
    let s = probe_scale(data);
    let mut rows = Vec::new();
    for kind in ControlKind::ALL {
        let tag = kind.tag();
        let sol = optimal_control(geom, data, kind, variant)?;
        let cost_at = |c: ControlValue| evaluate_cost(geom, data, kind, c, variant);
        let at_optimum = cost_at(sol.control)?;
        rows.push(ReportRow::compare(&case.name, tag, &label, "cost_at_optimum", sol.cost, at_optimum, tol.self_consistency));
        let (found, found_value, grad) = match sol.control {
            ControlValue::Scalar(c) => {
                let m = minimize_scalar_quadratic(|v| cost_at(ControlValue::Scalar(v)).unwrap_or(f64::NAN), s)?;
                let h = 1e-3 * c.abs().max(1.0);
                let d = (cost_at(ControlValue::Scalar(c + h))? - cost_at(ControlValue::Scalar(c - h))?) / (2.0 * h);
                (vec![("control", c, m.argmin)], m.value, d.abs())
            }
            ControlValue::Pair(g, q) => {
                let m = minimize_pair_quadratic(|a, b| cost_at(ControlValue::Pair(a, b)).unwrap_or(f64::NAN), s)?;
                let (hg, hq) = (1e-3 * g.abs().max(1.0), 1e-3 * q.abs().max(1.0));
                let dg = (cost_at(ControlValue::Pair(g + hg, q))? - cost_at(ControlValue::Pair(g - hg, q))?) / (2.0 * hg);
                let dq = (cost_at(ControlValue::Pair(g, q + hq))? - cost_at(ControlValue::Pair(g, q - hq))?) / (2.0 * hq);
                (vec![("control_g", g, m.argmin.0), ("control_q", q, m.argmin.1)], m.value, dg.hypot(dq))
            }
        };
        for (name, closed, oracle) in found {
            rows.push(ReportRow::compare(&case.name, tag, &label, name, closed, oracle, tol.oracle));
        }
        rows.push(ReportRow::compare(&case.name, tag, &label, "cost_vs_minimizer", sol.cost, found_value, tol.oracle));
        let scaled = grad / (1.0 + sol.cost.abs());
        rows.push(ReportRow::with_gap(&case.name, tag, &label, "gradient", 0.0, grad, scaled, tol.gradient));
    }
    Ok(rows)
}

/// The three routes to the simultaneous optimum, compared pairwise.
pub fn simultaneous_rows(case: &Case, variant: Variant, tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let (geom, data) = (&case.geom, &case.data);
    let label = variant.label();
    let ((dg, dq), _) = theorem_pair(geom, data, variant.inv_alpha())?;
    let sol = optimal_control(geom, data, ControlKind::Simultaneous, variant)?;
    let (sg, sq) = sol.spd_control.expect("the simultaneous solution carries its SPD solve");
    let cost = |a: f64, b: f64| {
        evaluate_cost(geom, data, ControlKind::Simultaneous, ControlValue::Pair(a, b), variant).unwrap_or(f64::NAN)
    };
    let scan = minimize_pair_quadratic(cost, probe_scale(data))?.argmin;
    let mut rows = Vec::new();
    for (name, a, b) in [
        ("ratio_vs_spd", (dg, dq), (sg, sq)),
        ("ratio_vs_scan", (dg, dq), scan),
        ("spd_vs_scan", (sg, sq), scan),
    ] {
        rows.push(ReportRow::compare(&case.name, "gq", &label, format!("{name}:g"), a.0, b.0, tol.oracle));
        rows.push(ReportRow::compare(&case.name, "gq", &label, format!("{name}:q"), a.1, b.1, tol.oracle));
    }
    Ok(rows)
}

/// `α‖u_α − u‖ = (x0 y0)^{1/2}|q − g x0|` for every α: pointwise from the
/// closed forms and by quadrature.
pub fn gap_identity_rows(case: &Case, alphas: &[f64], tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    let DomainGeometry::Rectangle { x0, .. } = case.geom else {
        return Ok(Vec::new());
    };
    let k1 = state_gap_constant(&case.geom, &case.data).value;
    let root_vol = case.geom.measures().volume.sqrt();
    let mut rows = Vec::new();
    for &alpha in alphas {
        let label = Variant::robin(alpha)?.label();
        let (ur, ud) = (state(&case.geom, &case.data, 1.0 / alpha), state(&case.geom, &case.data, 0.0f64));
        // The gap field is constant, so its norm is |gap|·vol^{1/2} at any
        // point; report the sample that strays furthest.
        let worst = (0..=8)
            .map(|i| alpha * root_vol * (ur.value(x0 * i as f64 / 8.0) - ud.value(x0 * i as f64 / 8.0)).abs())
            .max_by(|a, b| relative_gap(*a, k1).total_cmp(&relative_gap(*b, k1)))
            .unwrap_or(f64::NAN);
        rows.push(ReportRow::compare(&case.name, "-", &label, "state_gap_identity", k1, worst, tol.gap_identity));
        let quad = alpha * weighted_l2(&case.geom, |t| ur.value(t) - ud.value(t), 64).sqrt();
        rows.push(ReportRow::compare(
            &case.name,
            "-",
            &label,
            "state_gap_identity:quadrature",
            k1,
            quad,
            tol.gap_identity_quadrature,
        ));
    }
    Ok(rows)
}

/// Sweep result for one limit constant.
#[derive(Debug, Clone)]
pub struct SweptLimit {
    pub constant: LimitConstant,
    pub fit: OrderFit,
}

impl SweptLimit {
    /// Extrapolated `lim α·gap`, zero for an exact sweep.
    pub fn extrapolated(&self) -> f64 {
        match self.fit {
            OrderFit::Fitted(f) => f.limit,
            OrderFit::Exact => 0.0,
            OrderFit::Degenerate => f64::NAN,
        }
    }

    fn problem(&self) -> &'static str {
        self.constant.name.control_kind().map_or("-", |k| k.tag())
    }
}

pub fn sweep_limits(case: &Case, alphas: &[f64]) -> ocbench_core::Result<Vec<SweptLimit>> {
    all_limits(&case.geom, &case.data)
        .into_iter()
        .map(|constant| {
            let records = alpha_sweep(&case.geom, &case.data, Quantity::Gap(constant.name), alphas)?;
            Ok(SweptLimit { constant, fit: fit_order(&records)? })
        })
        .collect()
}

/// Log-log slope of every gap; exact sweeps are reported as such.
pub fn rate_rows(case: &Case, swept: &[SweptLimit], tol: &Tolerances) -> Vec<ReportRow> {
    swept
        .iter()
        .map(|s| {
            let quantity = format!("rate:{}", s.constant.label());
            match s.fit {
                OrderFit::Fitted(f) => {
                    ReportRow::with_gap(&case.name, s.problem(), "sweep", quantity, -1.0, f.slope, (f.slope + 1.0).abs(), tol.slope)
                }
                OrderFit::Exact => ReportRow::with_gap(&case.name, s.problem(), "sweep", quantity, -1.0, f64::NAN, 0.0, tol.slope)
                    .with_verdict(Verdict::Exact),
                OrderFit::Degenerate => {
                    ReportRow::with_gap(&case.name, s.problem(), "sweep", quantity, -1.0, f64::NAN, f64::NAN, tol.slope)
                }
            }
        })
        .collect()
}

fn limit_row(case: &Case, s: &SweptLimit, quantity: String, closed: f64, tol: f64) -> ReportRow {
    let extrapolated = s.extrapolated();
    let row = ReportRow::compare(&case.name, s.problem(), "sweep", quantity, closed, extrapolated, tol);
    if matches!(s.fit, OrderFit::Exact) && closed.abs() <= 1e-12 * case.data.offset().abs().max(1.0) {
        row.with_verdict(Verdict::Exact)
    } else {
        row
    }
}

/// In-use limit constants against the sweep extrapolation.
pub fn limit_rows(case: &Case, swept: &[SweptLimit], tol: &Tolerances) -> Vec<ReportRow> {
    swept.iter().map(|s| limit_row(case, s, format!("limit:{}", s.constant.label()), s.constant.value, tol.limit)).collect()
}

/// Printed limit expressions against the sweep extrapolation: the formula
/// audit.
pub fn printed_limit_rows(case: &Case, swept: &[SweptLimit], tol: &Tolerances) -> Vec<ReportRow> {
    swept
        .iter()
        .map(|s| limit_row(case, s, format!("printed:{}", s.constant.label()), s.constant.printed, tol.limit))
        .collect()
}

/// In-use constants against `d/dε` at `ε = 1/α = 0` by dual numbers.
pub fn derivative_rows(case: &Case, swept: &[SweptLimit], tol: &Tolerances) -> ocbench_core::Result<Vec<ReportRow>> {
    swept
        .iter()
        .map(|s| {
            let d = derivative_limit(&case.geom, &case.data, s.constant.name)?;
            let row = ReportRow::compare(
                &case.name,
                s.problem(),
                "dual",
                format!("derivative:{}", s.constant.label()),
                s.constant.value,
                d,
                tol.oracle,
            );
            let vanishing = d.is_finite() && s.constant.value.abs().max(d.abs()) <= 1e-12 * case.data.offset().abs().max(1.0);
            Ok(if vanishing { row.with_verdict(Verdict::Exact) } else { row })
        })
        .collect()
}

/// Admissible random geometry of the given kind and random data.
pub fn random_case(rng: &mut ChaCha8Rng, kind: GeometryKind) -> Case {
    let a = rng.gen_range(0.5..2.0);
    let ratio = rng.gen_range(1.2..3.0);
    let geom = match kind {
        GeometryKind::Rectangle => DomainGeometry::rectangle(a, a * ratio / 2.0),
        GeometryKind::Annulus => DomainGeometry::annulus(a, a * ratio),
        GeometryKind::Shell => DomainGeometry::shell(a, a * ratio),
    }
    .expect("random dimensions are admissible");
    let mut draw = || rng.gen_range(-2.0..2.0);
    let (g, q, b, z) = (draw(), draw(), draw(), draw());
    let m = [0; 5].map(|_| rng.gen_range(0.2..3.0));
    Case::new(geom, ProblemData::new(g, q, b, z, m).expect("random data are admissible"))
}

/// Log-uniform Robin coefficient in `[1, 10³]`.
pub fn random_alpha(rng: &mut ChaCha8Rng) -> f64 {
    10f64.powf(rng.gen_range(0.0..3.0))
}
