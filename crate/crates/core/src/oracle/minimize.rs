//! Minimizers for costs that are exactly quadratic in their control.
//!
//! The quadratic is recovered from a handful of evaluations, so the result is
//! exact up to rounding; a spare evaluation guards the quadratic assumption.

use crate::error::{BenchError, Result};

/// Relative tolerance of the quadraticity check.
const QUADRATIC_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMinimum {
    pub argmin: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairMinimum {
    pub argmin: (f64, f64),
    pub value: f64,
}

fn check(predicted: f64, actual: f64, scale: f64) -> Result<()> {
    if (predicted - actual).abs() > QUADRATIC_CHECK_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(BenchError::NonQuadratic(format!("fit predicts {predicted}, evaluator returned {actual}")));
    }
    Ok(())
}

/// Fits `a v² + b v + c` through `v ∈ {−s, 0, s}` and checks the fit at `2s`.
pub fn minimize_scalar_quadratic(f: impl Fn(f64) -> f64, s: f64) -> Result<ScalarMinimum> {
    if !(s > 0.0) {
        return Err(BenchError::Argument(format!("probe scale must be positive, got {s}")));
    }
    let (fm, f0, fp) = (f(-s), f(0.0), f(s));
    let a = (fp + fm - 2.0 * f0) / (2.0 * s * s);
    let b = (fp - fm) / (2.0 * s);
    if !(a > 0.0) {
        return Err(BenchError::NonQuadratic(format!("fitted curvature {a} is not positive")));
    }
    let f2 = f(2.0 * s);
    check(4.0 * a * s * s + 2.0 * b * s + f0, f2, fm.abs() + f0.abs() + fp.abs() + f2.abs())?;
    let argmin = -b / (2.0 * a);
    Ok(ScalarMinimum { argmin, value: f(argmin) })
}

/// Recovers the quadratic from `(0,0), (±s,0), (0,±s), (s,s)` and solves the
/// 2×2 normal equations.
pub fn minimize_pair_quadratic(f: impl Fn(f64, f64) -> f64, s: f64) -> Result<PairMinimum> {
    if !(s > 0.0) {
        return Err(BenchError::Argument(format!("probe scale must be positive, got {s}")));
    }
    let c = f(0.0, 0.0);
    let (gp, gm) = (f(s, 0.0), f(-s, 0.0));
    let (qp, qm) = (f(0.0, s), f(0.0, -s));
    let fss = f(s, s);
    let s2 = s * s;
    let agg = (gp + gm - 2.0 * c) / (2.0 * s2);
    let aqq = (qp + qm - 2.0 * c) / (2.0 * s2);
    let bg = (gp - gm) / (2.0 * s);
    let bq = (qp - qm) / (2.0 * s);
    let agq = (fss - c - (agg + aqq) * s2 - (bg + bq) * s) / s2;
    // Hessian [2agg agq; agq 2aqq].
    let det = 4.0 * agg * aqq - agq * agq;
    if !(agg > 0.0 && det > 0.0) {
        return Err(BenchError::NonQuadratic(format!("indefinite quadratic part: agg = {agg}, det = {det}")));
    }
    let g = (agq * bq - 2.0 * aqq * bg) / det;
    let q = (agq * bg - 2.0 * agg * bq) / det;
    let scale = [c, gp, gm, qp, qm, fss].iter().map(|v| v.abs()).sum::<f64>();
    let fmm = f(-s, -s);
    check(c + (agg + aqq + agq) * s2 - (bg + bq) * s, fmm, scale + fmm.abs())?;
    Ok(PairMinimum { argmin: (g, q), value: f(g, q) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn shifted_parabola() {
        let m = minimize_scalar_quadratic(|v| (v - 3.0).powi(2), 1.0).unwrap();
        assert_relative_eq!(m.argmin, 3.0, max_relative = 1e-14);
        assert!(m.value.abs() < 1e-14);
    }

    #[test]
    fn quartic_is_rejected() {
        let err = minimize_scalar_quadratic(|v| v.powi(4) + v * v, 1.0).unwrap_err();
        assert!(matches!(err, BenchError::NonQuadratic(_)));
    }

    #[test]
    fn pair_bowl() {
        let m = minimize_pair_quadratic(|g, q| g * g + q * q, 1.0).unwrap();
        assert!(m.argmin.0.abs() < 1e-15 && m.argmin.1.abs() < 1e-15);
        let m = minimize_pair_quadratic(|g, q| 2.0 * (g - 1.0).powi(2) + (q + 2.0).powi(2) + (g - 1.0) * (q + 2.0), 1.0)
            .unwrap();
        assert_relative_eq!(m.argmin.0, 1.0, max_relative = 1e-13);
        assert_relative_eq!(m.argmin.1, -2.0, max_relative = 1e-13);
    }

    #[test]
    fn saddle_is_rejected() {
        assert!(minimize_pair_quadratic(|g, q| g * g - q * q, 1.0).is_err());
    }
}
