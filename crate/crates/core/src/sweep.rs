//! α-sweeps of Robin-versus-Dirichlet gaps and their `O(1/α)` fits.

use std::fmt;

use crate::coefficients::coefficients;
use crate::control::{theorem_pair, theorem_scalar};
use crate::error::{BenchError, Result};
use crate::limits::LimitName;
use crate::oracle::quadrature::weighted_l2;
use crate::problem::{DomainGeometry, ProblemData};
use crate::profile::{adjoint, state};

/// Nodes for the field-gap norms; the integrands are smooth, so Simpson's
/// error is far below the gaps even at `α = 10⁶`.
pub const FIELD_QUADRATURE_NODES: usize = 400;

/// Gaps below this multiple of the compared values are rounding noise.
const ROUNDOFF_GAP: f64 = 64.0 * f64::EPSILON;

/// A quantity whose Robin and Dirichlet values are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    /// A gap that has a limit constant.
    Gap(LimitName),
    /// The `(b − z_d)²` coefficient, which does not depend on α.
    ThirdCoefficient,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gap(n) => n.key(),
            Self::ThirdCoefficient => "k3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        if name == "k3" {
            return Some(Self::ThirdCoefficient);
        }
        LimitName::from_key(name).map(Self::Gap)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub alpha: f64,
    pub dirichlet_value: f64,
    pub robin_value: f64,
    pub gap: f64,
    pub alpha_times_gap: f64,
}

/// `points` geometrically spaced values from `start` to `stop` inclusive.
pub fn geometric_grid(start: f64, stop: f64, points: usize) -> Result<Vec<f64>> {
    if !(start > 0.0 && stop > start && points >= 2) {
        return Err(BenchError::Argument(format!(
            "geometric grid needs 0 < start < stop and at least 2 points, got {start}, {stop}, {points}"
        )));
    }
    let ratio = (stop / start).ln() / (points - 1) as f64;
    Ok((0..points).map(|i| if i + 1 == points { stop } else { start * (ratio * i as f64).exp() }).collect())
}

/// Value of the quantity at `1/α` (0 for Dirichlet). For field gaps the
/// value is the L² norm of the field.
fn quantity_value(geom: &DomainGeometry, data: &ProblemData, quantity: Quantity, inv_alpha: f64) -> Result<f64> {
    use LimitName::*;
    let v = match quantity {
        Quantity::ThirdCoefficient => coefficients(geom, inv_alpha).k[2],
        Quantity::Gap(StateGap) => {
            let u = state(geom, data, inv_alpha);
            weighted_l2(geom, |t| u.value(t), FIELD_QUADRATURE_NODES).sqrt()
        }
        Quantity::Gap(AdjointGap) => {
            let p = adjoint(geom, data, inv_alpha);
            weighted_l2(geom, |t| p.value(t), FIELD_QUADRATURE_NODES).sqrt()
        }
        Quantity::Gap(name @ (ControlG | ControlQ | ControlB)) => {
            theorem_scalar(geom, data, name.control_kind().unwrap(), inv_alpha)?.0
        }
        Quantity::Gap(name @ (CostJ1 | CostJ2 | CostJ3)) => {
            theorem_scalar(geom, data, name.control_kind().unwrap(), inv_alpha)?.1
        }
        Quantity::Gap(PairG) => theorem_pair(geom, data, inv_alpha)?.0 .0,
        Quantity::Gap(PairQ) => theorem_pair(geom, data, inv_alpha)?.0 .1,
        Quantity::Gap(CostJ4) => theorem_pair(geom, data, inv_alpha)?.1,
    };
    Ok(v)
}

/// `|Robin − Dirichlet|` at `1/α`. Field gaps integrate the pointwise
/// difference rather than differencing two norms.
fn gap(geom: &DomainGeometry, data: &ProblemData, quantity: Quantity, inv_alpha: f64) -> Result<f64> {
    let g = match quantity {
        Quantity::Gap(LimitName::StateGap) => {
            let (ur, ud) = (state(geom, data, inv_alpha), state(geom, data, 0.0));
            weighted_l2(geom, |t| ur.value(t) - ud.value(t), FIELD_QUADRATURE_NODES).sqrt()
        }
        Quantity::Gap(LimitName::AdjointGap) => {
            let (pr, pd) = (adjoint(geom, data, inv_alpha), adjoint(geom, data, 0.0));
            weighted_l2(geom, |t| pr.value(t) - pd.value(t), FIELD_QUADRATURE_NODES).sqrt()
        }
        _ => (quantity_value(geom, data, quantity, inv_alpha)? - quantity_value(geom, data, quantity, 0.0)?).abs(),
    };
    Ok(g)
}

/// Robin and Dirichlet values of `quantity` at each α of a strictly
/// increasing grid.
pub fn alpha_sweep(
    geom: &DomainGeometry,
    data: &ProblemData,
    quantity: Quantity,
    alphas: &[f64],
) -> Result<Vec<SweepRecord>> {
    if alphas.len() < 4 {
        return Err(BenchError::Argument(format!("a sweep needs at least 4 alphas, got {}", alphas.len())));
    }
    if alphas.iter().any(|a| !(a.is_finite() && *a > 0.0)) || alphas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(BenchError::Argument("alphas must be positive and strictly increasing".into()));
    }
    let dirichlet_value = quantity_value(geom, data, quantity, 0.0)?;
    alphas
        .iter()
        .map(|&alpha| {
            let inv = 1.0 / alpha;
            let robin_value = quantity_value(geom, data, quantity, inv)?;
            let gap = gap(geom, data, quantity, inv)?;
            Ok(SweepRecord { alpha, dirichlet_value, robin_value, gap, alpha_times_gap: alpha * gap })
        })
        .collect()
}

/// Log-log slope of the gaps and the extrapolated `lim α·gap`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// `L` in `α·gap = L + c/α`, from the two largest α.
    pub limit: f64,
    /// Max relative misfit of that model on the remaining points.
    pub model_residual: f64,
    pub points: usize,
}

/// Outcome of [`fit_order`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderFit {
    /// Every gap is exactly zero.
    Exact,
    /// Some but not all gaps vanish; no rate can be fitted.
    Degenerate,
    Fitted(RateFit),
}

pub fn fit_order(records: &[SweepRecord]) -> Result<OrderFit> {
    if records.len() < 4 {
        return Err(BenchError::Argument(format!("a rate fit needs at least 4 points, got {}", records.len())));
    }
    // A gap at the rounding level of the values it compares is zero.
    let is_zero = |r: &SweepRecord| r.gap <= ROUNDOFF_GAP * r.dirichlet_value.abs().max(r.robin_value.abs());
    if records.iter().all(is_zero) {
        return Ok(OrderFit::Exact);
    }
    if records.iter().any(|r| !(r.gap > 0.0) || is_zero(r)) {
        return Ok(OrderFit::Degenerate);
    }
    let n = records.len() as f64;
    let xs: Vec<f64> = records.iter().map(|r| r.alpha.ln()).collect();
    let ys: Vec<f64> = records.iter().map(|r| r.gap.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r_squared = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };

    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    let (p, q) = (sorted[sorted.len() - 2], sorted[sorted.len() - 1]);
    // α·gap = L + c/α through the two largest α.
    let (u1, u2) = (1.0 / p.alpha, 1.0 / q.alpha);
    let c = (p.alpha_times_gap - q.alpha_times_gap) / (u1 - u2);
    let limit = q.alpha_times_gap - c * u2;
    let model_residual = sorted[..sorted.len() - 2]
        .iter()
        .map(|r| ((limit + c / r.alpha) - r.alpha_times_gap).abs() / r.alpha_times_gap.abs())
        .fold(0.0, f64::max);
    Ok(OrderFit::Fitted(RateFit { slope, intercept, r_squared, limit, model_residual, points: records.len() }))
}
