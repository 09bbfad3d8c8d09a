//! Second-order finite differences for `-(1/w)(w v')' = f` on the reduced
//! interval.
//!
//! The operator is discretized in flux form, `w` sampled at half nodes. The
//! Robin condition at `Γ1` and the flux condition at `Γ2` are imposed through
//! a ghost node eliminated with a central difference, so the boundary rows
//! are the same flux-form stencil as the interior.

use crate::error::{BenchError, Result};
use crate::oracle::grid::Grid1D;
use crate::problem::{DomainGeometry, ProblemData, Variant};
use crate::profile;

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSolution {
    pub grid: Grid1D,
    pub values: Vec<f64>,
}

impl DiscreteSolution {
    /// Max nodal deviation from a reference field.
    pub fn max_error(&self, exact: impl Fn(f64) -> f64) -> f64 {
        self.grid.nodes.iter().zip(&self.values).map(|(&t, &v)| (v - exact(t)).abs()).fold(0.0, f64::max)
    }
}

/// Solves the state problem (`adjoint_source = None`, source `g`) or the
/// adjoint problem with source `u − z_d`, where `u` is given at the grid nodes.
pub fn solve_bvp(
    geom: &DomainGeometry,
    data: &ProblemData,
    variant: Variant,
    adjoint_source: Option<&[f64]>,
    n: usize,
) -> Result<DiscreteSolution> {
    let grid = Grid1D::new(geom, n)?;
    let np = grid.len();
    if let Some(u) = adjoint_source {
        if u.len() != np {
            return Err(BenchError::Argument(format!("adjoint source has {} values, grid has {np}", u.len())));
        }
    }
    let h = grid.h;
    let w = |t: f64| geom.operator_weight(t);
    let source = |i: usize| match adjoint_source {
        None => data.g,
        Some(u) => u[i] - data.z_d,
    };
    // Γ1 target value and Γ2 outward derivative v'(hi).
    let (target, end_slope) = match adjoint_source {
        None => (data.b, -data.q),
        Some(_) => (0.0, 0.0),
    };

    let mut sub = vec![0.0; np];
    let mut diag = vec![0.0; np];
    let mut sup = vec![0.0; np];
    let mut rhs = vec![0.0; np];
    for i in 0..np {
        let t = grid.nodes[i];
        let (wl, wr) = (w(t - h / 2.0), w(t + h / 2.0));
        sub[i] = -wl;
        diag[i] = wl + wr;
        sup[i] = -wr;
        rhs[i] = h * h * w(t) * source(i);
    }
    match variant {
        Variant::Dirichlet => {
            diag[0] = 1.0;
            sup[0] = 0.0;
            rhs[0] = target;
        }
        Variant::Robin(alpha) => {
            // v_{-1} = v_1 - 2hα(v_0 - target)
            let a = alpha.value();
            let wl = -sub[0];
            diag[0] += 2.0 * h * a * wl;
            sup[0] -= wl;
            rhs[0] += 2.0 * h * a * wl * target;
        }
    }
    sub[0] = 0.0;
    // v_{n+1} = v_{n-1} + 2h v'(hi)
    let last = np - 1;
    let wr = -sup[last];
    sub[last] -= wr;
    sup[last] = 0.0;
    rhs[last] += 2.0 * h * wr * end_slope;

    let values = thomas(&sub, &diag, &sup, &rhs)?;
    Ok(DiscreteSolution { grid, values })
}

/// State solve followed by an adjoint solve driven by the closed-form state.
pub fn solve_adjoint(geom: &DomainGeometry, data: &ProblemData, variant: Variant, n: usize) -> Result<DiscreteSolution> {
    let grid = Grid1D::new(geom, n)?;
    let u = profile::profile_for(geom, data, profile::FieldKind::State, variant);
    let nodal: Vec<f64> = grid.nodes.iter().map(|&t| u.value(t)).collect();
    solve_bvp(geom, data, variant, Some(&nodal), n)
}

/// Discrete state, then a discrete adjoint driven by it. Errors compound, so
/// checks against this mode use a doubled tolerance.
pub fn solve_chained(
    geom: &DomainGeometry,
    data: &ProblemData,
    variant: Variant,
    n: usize,
) -> Result<(DiscreteSolution, DiscreteSolution)> {
    let u = solve_bvp(geom, data, variant, None, n)?;
    let p = solve_bvp(geom, data, variant, Some(&u.values), n)?;
    Ok((u, p))
}

/// Tridiagonal solve without pivoting.
fn thomas(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut pivot = diag[0];
    if pivot == 0.0 {
        return Err(BenchError::Singular { row: 0 });
    }
    c[0] = sup[0] / pivot;
    d[0] = rhs[0] / pivot;
    for i in 1..n {
        pivot = diag[i] - sub[i] * c[i - 1];
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(BenchError::Singular { row: i });
        }
        c[i] = sup[i] / pivot;
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / pivot;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{profile_for, FieldKind};

    #[test]
    fn constant_solution_is_reproduced() {
        let data = ProblemData::new(0.0, 0.0, 2.5, 0.0, [1.0; 5]).unwrap();
        for geom in [DomainGeometry::rectangle(1.0, 1.0).unwrap(), DomainGeometry::shell(1.0, 2.0).unwrap()] {
            let s = solve_bvp(&geom, &data, Variant::Dirichlet, None, 16).unwrap();
            assert!(s.values.iter().all(|v| (v - 2.5).abs() < 1e-13));
        }
    }

    #[test]
    fn thomas_solves_small_system() {
        let x = thomas(&[0.0, -1.0, -1.0], &[2.0, 2.0, 2.0], &[-1.0, -1.0, 0.0], &[1.0, 0.0, 1.0]).unwrap();
        for v in x {
            assert!((v - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn second_order_on_robin_shell() {
        let geom = DomainGeometry::shell(1.0, 2.0).unwrap();
        let data = ProblemData::new(1.0, 0.5, 0.2, -0.3, [1.0; 5]).unwrap();
        let variant = Variant::robin(100.0).unwrap();
        let exact = profile_for(&geom, &data, FieldKind::State, variant);
        let e1 = solve_bvp(&geom, &data, variant, None, 128).unwrap().max_error(|t| exact.value(t));
        let e2 = solve_bvp(&geom, &data, variant, None, 256).unwrap().max_error(|t| exact.value(t));
        let ratio = e1 / e2;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }
}
