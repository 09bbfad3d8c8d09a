//! Closed-form states and adjoint states.
//!
//! Each field is a function of the single coordinate `x` (rectangle) or `r`
//! (annulus, shell). The Robin formulas are written in terms of `1/α`, and
//! setting `1/α = 0` recovers the Dirichlet formulas term by term, so one
//! evaluator serves both boundary conditions.
//!
//! Conventions: `-(1/w)(w v')' = f` with `w = 1, r, r²`; on `Γ1` the state
//! satisfies `u = b` (Dirichlet) or `u' = α(u - b)` (Robin); on `Γ2`
//! `-u' = q`. The adjoint satisfies `p = 0` or `p' = α p` on `Γ1` and
//! `p' = 0` on `Γ2`, with source `u - z_d`.

use crate::problem::{DomainGeometry, ProblemData, Variant};
use crate::scalar::{lift, Real};

/// State `u` or adjoint state `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    State,
    Adjoint,
}

/// Integration constants recorded by the adjoint formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrationConstants<T> {
    /// States carry no named constants.
    None,
    Rectangle { a: T },
    Annulus { d1: T, d2: T },
    Shell { f1: T, f2: T },
}

/// A closed-form field on the reduced interval.
#[derive(Debug, Clone, Copy)]
pub struct Profile<T = f64> {
    pub geom: DomainGeometry,
    pub data: ProblemData,
    pub field: FieldKind,
    /// `1/α`, zero for the Dirichlet problem.
    pub inv_alpha: T,
    pub constants: IntegrationConstants<T>,
}

/// Closed-form state for `1/α` given as a scalar (0 for Dirichlet).
pub fn state<T: Real>(geom: &DomainGeometry, data: &ProblemData, inv_alpha: T) -> Profile<T> {
    Profile { geom: *geom, data: *data, field: FieldKind::State, inv_alpha, constants: IntegrationConstants::None }
}

/// Closed-form adjoint state for `1/α` given as a scalar (0 for Dirichlet).
pub fn adjoint<T: Real>(geom: &DomainGeometry, data: &ProblemData, inv_alpha: T) -> Profile<T> {
    let constants = adjoint_constants(geom, data, inv_alpha);
    Profile { geom: *geom, data: *data, field: FieldKind::Adjoint, inv_alpha, constants }
}

pub fn state_dirichlet(geom: &DomainGeometry, data: &ProblemData) -> Profile {
    state(geom, data, 0.0)
}

pub fn adjoint_dirichlet(geom: &DomainGeometry, data: &ProblemData) -> Profile {
    adjoint(geom, data, 0.0)
}

pub fn state_robin(geom: &DomainGeometry, data: &ProblemData, alpha: crate::RobinParameter) -> Profile {
    state(geom, data, 1.0 / alpha.value())
}

pub fn adjoint_robin(geom: &DomainGeometry, data: &ProblemData, alpha: crate::RobinParameter) -> Profile {
    adjoint(geom, data, 1.0 / alpha.value())
}

/// State or adjoint for a [`Variant`].
pub fn profile_for(geom: &DomainGeometry, data: &ProblemData, field: FieldKind, variant: Variant) -> Profile {
    match field {
        FieldKind::State => state(geom, data, variant.inv_alpha()),
        FieldKind::Adjoint => adjoint(geom, data, variant.inv_alpha()),
    }
}

fn adjoint_constants<T: Real>(geom: &DomainGeometry, data: &ProblemData, ia: T) -> IntegrationConstants<T> {
    let ProblemData { g, q, .. } = *data;
    let d = data.offset();
    match *geom {
        DomainGeometry::Rectangle { x0, .. } => {
            // A_α = x0 [g x0² (1/3 + 1/(α x0)) - q x0 (1/2 + 1/(α x0)) + (b - z_d)]
            let e = ia / x0;
            let a = ((e + 1.0 / 3.0) * (g * x0 * x0) - (e + 0.5) * (q * x0) + d) * x0;
            IntegrationConstants::Rectangle { a }
        }
        DomainGeometry::Annulus { r1, r2 } => {
            let e = ia / r1;
            let rho2 = (r2 / r1).powi(2);
            let lr = (r2 / r1).ln();
            let d1 = ((e + lr - 0.75) * rho2 + 0.5 - e) * (g * r1 * r1 / 2.0) - (e + lr - 0.5) * (q * r2) + d;
            let d1 = d1 * (r2 * r2 / 2.0);
            let e2 = e * e;
            let bracket_g = -(e / rho2 - e * 2.0 + e2 * 2.0 + 1.0) * rho2 + e2 * 2.0 - e / 2.0 + 3.0 / 8.0;
            let d2 = (bracket_g * (g * r1 * r1 / 2.0) + (-e * 2.0 + e2 * 2.0 + 1.0) * (q * r2) + (-e * 2.0 + 1.0) * d)
                * (r1 * r1 / 4.0)
                + d1 * e;
            IntegrationConstants::Annulus { d1, d2 }
        }
        DomainGeometry::Shell { r1, r2 } => {
            let e = ia / r1;
            let rho = r2 / r1;
            let e2 = e * e;
            let f1 = (-(e + 1.0) * (rho.powi(3) / 9.0) + rho * rho / 5.0 - (-e * 2.0 + 1.0) / 18.0) * (g * r1 * r1 * r2.powi(3))
                + ((e + 1.0) * (rho / 3.0) - 0.5) * (q * r2.powi(4))
                - r2.powi(3) / 3.0 * d;
            let f2 = (-e * 0.7 + e2 + 7.0 / 40.0 - (-e + e2 + 1.0) * rho.powi(3)) * (g * r1.powi(4) / 9.0)
                + (-e + e2 + 1.0) * (q * r1 * r2 * r2 / 3.0)
                + (-e * 2.0 + 1.0) * (r1 * r1 / 6.0 * d)
                - f1 / r1 * (e + 1.0);
            IntegrationConstants::Shell { f1, f2 }
        }
    }
}

impl<T: Real> Profile<T> {
    /// Coordinate interval `(lo, hi)`.
    pub fn interval(&self) -> (f64, f64) {
        self.geom.interval()
    }

    fn e(&self) -> T {
        self.inv_alpha / self.geom.robin_length()
    }

    /// Field value at coordinate `t`.
    pub fn value(&self, t: f64) -> T {
        match self.field {
            FieldKind::State => self.state_value(t),
            FieldKind::Adjoint => self.adjoint_value(t),
        }
    }

    /// Analytic derivative with respect to the coordinate.
    pub fn derivative(&self, t: f64) -> T {
        match self.field {
            FieldKind::State => self.state_derivative(t),
            FieldKind::Adjoint => self.adjoint_derivative(t),
        }
    }

    /// Right-hand side `f` of `-(1/w)(w v')' = f` at `t`.
    pub fn source(&self, t: f64) -> T {
        match self.field {
            FieldKind::State => lift(self.data.g),
            FieldKind::Adjoint => self.state_value(t) - self.data.z_d,
        }
    }

    fn state_value(&self, t: f64) -> T {
        let ProblemData { g, q, b, .. } = self.data;
        let e = self.e();
        match self.geom {
            DomainGeometry::Rectangle { x0, .. } => {
                let s = g * x0 - q;
                self.inv_alpha * s + (-g * t * t / 2.0 + s * t + b)
            }
            DomainGeometry::Annulus { r1, r2 } => {
                let rho2 = (r2 / r1).powi(2);
                let lam = (t / r1).ln();
                ((e + lam) * rho2 - (t / r1).powi(2) / 2.0 + 0.5 - e) * (g * r1 * r1 / 2.0) - (e + lam) * (q * r2) + b
            }
            DomainGeometry::Shell { r1, r2 } => {
                let rho = r2 / r1;
                (-e + 0.5 - (t / r1).powi(2) / 2.0 + (e + 1.0) * rho.powi(3) - r2 / t * rho * rho) * (g * r1 * r1 / 3.0)
                    + (-e + r1 / t - 1.0) * (q * r2 * r2 / r1)
                    + b
            }
        }
    }

    fn state_derivative(&self, t: f64) -> T {
        let ProblemData { g, q, .. } = self.data;
        // u' does not depend on 1/α in any geometry.
        let v = match self.geom {
            DomainGeometry::Rectangle { x0, .. } => -g * t + (g * x0 - q),
            DomainGeometry::Annulus { r1, r2 } => g * r1 * r1 / 2.0 * ((r2 / r1).powi(2) / t - t / (r1 * r1)) - q * r2 / t,
            DomainGeometry::Shell { r1, r2 } => {
                let rho = r2 / r1;
                g * r1 * r1 / 3.0 * (-t / (r1 * r1) + r2 * rho * rho / (t * t)) - q * r2 * r2 / (t * t)
            }
        };
        lift(v)
    }

    fn adjoint_value(&self, t: f64) -> T {
        let ProblemData { g, q, .. } = self.data;
        let d = self.data.offset();
        let ia = self.inv_alpha;
        let e = self.e();
        match (self.geom, self.constants) {
            (DomainGeometry::Rectangle { x0, .. }, IntegrationConstants::Rectangle { a }) => {
                let s = g * x0 - q;
                (ia * s + d) * (-t * t / 2.0) + a * t + a * ia + (g * t.powi(4) / 24.0 - s * t.powi(3) / 6.0)
            }
            (DomainGeometry::Annulus { r1, r2 }, IntegrationConstants::Annulus { d1, d2 }) => {
                let rho2 = (r2 / r1).powi(2);
                let lam = (t / r1).ln();
                let bracket = -(e - e / rho2 + lam - 1.0) * rho2 + (t / r1).powi(2) / 8.0 - 0.5;
                bracket * (g * r1 * r1 * t * t / 8.0) + (e + lam - 1.0) * (q * r2 * t * t / 4.0) - d * t * t / 4.0
                    + d1 * lam
                    + d2
            }
            (DomainGeometry::Shell { r1, r2 }, IntegrationConstants::Shell { f1, f2 }) => {
                let rho = r2 / r1;
                let bracket =
                    -(e + 1.0) * (rho.powi(3) / 3.0) + e / 3.0 + (t / r1).powi(2) / 20.0 + r2 / t * rho * rho - 1.0 / 6.0;
                bracket * (g * r1 * r1 * t * t / 6.0) + (e * (t / (3.0 * r1)) + t / (3.0 * r1) - 1.0) * (q * r2 * r2 * t / 2.0)
                    - t * t / 6.0 * d
                    + f1 / t
                    + f2
            }
            _ => unreachable!("adjoint constants always match the geometry"),
        }
    }

    fn adjoint_derivative(&self, t: f64) -> T {
        let ProblemData { g, q, .. } = self.data;
        let d = self.data.offset();
        let ia = self.inv_alpha;
        let e = self.e();
        match (self.geom, self.constants) {
            (DomainGeometry::Rectangle { x0, .. }, IntegrationConstants::Rectangle { a }) => {
                let s = g * x0 - q;
                (ia * s + d) * (-t) + a + (g * t.powi(3) / 6.0 - s * t * t / 2.0)
            }
            (DomainGeometry::Annulus { r1, r2 }, IntegrationConstants::Annulus { d1, .. }) => {
                let rho2 = (r2 / r1).powi(2);
                let lam = (t / r1).ln();
                // d/dr [r² B(r)] = 2 r B + r³/(4 r1²) - ρ² r
                let bracket = -(e - e / rho2 + lam - 1.0) * rho2 + (t / r1).powi(2) / 8.0 - 0.5;
                let d_r2b = bracket * (2.0 * t) + t.powi(3) / (4.0 * r1 * r1) - rho2 * t;
                d_r2b * (g * r1 * r1 / 8.0) + ((e + lam - 1.0) * (2.0 * t) + t) * (q * r2 / 4.0) - d * t / 2.0 + d1 / t
            }
            (DomainGeometry::Shell { r1, r2 }, IntegrationConstants::Shell { f1, .. }) => {
                let rho = r2 / r1;
                let d_r2c = (-(e + 1.0) * (rho.powi(3) / 3.0) + e / 3.0 - 1.0 / 6.0) * (2.0 * t)
                    + t.powi(3) / (5.0 * r1 * r1)
                    + r2 * rho * rho;
                d_r2c * (g * r1 * r1 / 6.0) + ((e + 1.0) * (2.0 * t / (3.0 * r1)) - 1.0) * (q * r2 * r2 / 2.0) - t * d / 3.0
                    - f1 / (t * t)
            }
            _ => unreachable!("adjoint constants always match the geometry"),
        }
    }
}

/// Boundary and interior residuals of a profile, each relative to the size
/// of the terms that cancel in it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub gamma1: f64,
    pub gamma2: f64,
    /// Max over interior nodes of the discrete operator residual.
    pub pde_max: f64,
}

impl Residuals {
    pub fn boundary_max(&self) -> f64 {
        self.gamma1.max(self.gamma2)
    }
}

/// Evaluates the boundary conditions exactly and samples the PDE residual
/// with the conservative three-point operator on `n` intervals.
pub fn boundary_residuals(profile: &Profile, n: usize) -> Residuals {
    let (lo, hi) = profile.interval();
    let data = profile.data;
    let ia = profile.inv_alpha;
    let alpha = if ia > 0.0 { 1.0 / ia } else { f64::INFINITY };
    let lscale = hi.abs().max(hi - lo);
    let d = data.offset();
    // Magnitudes of the field and its derivative in terms of the data.
    let (vscale, dscale, target) = match profile.field {
        FieldKind::State => (
            data.g.abs() * lscale * lscale + data.q.abs() * lscale + data.b.abs(),
            data.g.abs() * lscale + data.q.abs(),
            data.b,
        ),
        FieldKind::Adjoint => (
            (data.g.abs() * lscale.powi(2) + data.q.abs() * lscale + d.abs()) * lscale * lscale,
            (data.g.abs() * lscale.powi(2) + data.q.abs() * lscale + d.abs()) * lscale,
            0.0,
        ),
    };
    let tiny = f64::MIN_POSITIVE;
    let v_lo = profile.value(lo);
    let dv_lo = profile.derivative(lo);
    let gamma1 = if ia == 0.0 {
        (v_lo - target).abs() / (vscale + target.abs()).max(tiny)
    } else {
        (dv_lo - alpha * (v_lo - target)).abs() / (dscale + alpha * (vscale + target.abs())).max(tiny)
    };
    let flux = match profile.field {
        FieldKind::State => data.q,
        FieldKind::Adjoint => 0.0,
    };
    let gamma2 = (profile.derivative(hi) + flux).abs() / dscale.max(tiny);
    Residuals { gamma1, gamma2, pde_max: pde_residual(profile, n) }
}

/// Max interior residual of `-(1/w)(w v')' - f` with flux differencing at
/// half nodes. It decays as `O(h²)` unless the profile is reproduced
/// exactly by the stencil (e.g. the quadratic rectangle state).
pub fn pde_residual(profile: &Profile, n: usize) -> f64 {
    let (lo, hi) = profile.interval();
    let h = (hi - lo) / n as f64;
    let w = |t: f64| profile.geom.operator_weight(t);
    let mut worst = 0.0f64;
    for i in 1..n {
        let t = lo + i as f64 * h;
        let (vm, v0, vp) = (profile.value(t - h), profile.value(t), profile.value(t + h));
        let flux_r = w(t + h / 2.0) * (vp - v0);
        let flux_l = w(t - h / 2.0) * (v0 - vm);
        let op = -(flux_r - flux_l) / (h * h * w(t));
        worst = worst.max((op - profile.source(t)).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::RobinParameter;
    use approx::assert_relative_eq;

    fn data(g: f64, q: f64, b: f64, z: f64) -> ProblemData {
        ProblemData::new(g, q, b, z, [1.0; 5]).unwrap()
    }

    #[test]
    fn constant_state_without_source_or_flux() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let u = state_dirichlet(&geom, &data(0.0, 0.0, 5.0, 0.0));
        for t in [0.0, 0.3, 1.0] {
            assert_eq!(u.value(t), 5.0);
        }
    }

    #[test]
    fn rectangle_state_midpoint() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let u = state_dirichlet(&geom, &data(1.0, 1.0, 0.0, 0.0));
        assert_relative_eq!(u.value(0.5), -0.125, max_relative = 1e-15);
    }

    #[test]
    fn rectangle_robin_state_offset() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let u = state_robin(&geom, &data(0.0, 1.0, 0.0, 0.0), RobinParameter::new(10.0).unwrap());
        assert_relative_eq!(u.value(0.0), -0.1, max_relative = 1e-15);
    }

    #[test]
    fn rectangle_adjoint_with_unit_offset() {
        // p = -x²/2 + x, A = 1
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let p = adjoint_dirichlet(&geom, &data(0.0, 0.0, 1.0, 0.0));
        assert_eq!(p.constants, IntegrationConstants::Rectangle { a: 1.0 });
        for t in [0.0, 0.25, 0.5, 1.0] {
            assert_relative_eq!(p.value(t), -t * t / 2.0 + t, epsilon = 1e-15);
        }
    }

    #[test]
    fn zero_misfit_gives_zero_adjoint() {
        for geom in [
            DomainGeometry::rectangle(1.3, 0.7).unwrap(),
            DomainGeometry::annulus(1.0, 2.0).unwrap(),
            DomainGeometry::shell(0.5, 1.5).unwrap(),
        ] {
            let (lo, hi) = geom.interval();
            for ia in [0.0f64, 0.01, 1.0] {
                let p = adjoint(&geom, &data(0.0, 0.0, 2.0, 2.0), ia);
                for k in 0..=4 {
                    let t = lo + (hi - lo) * k as f64 / 4.0;
                    assert!(p.value(t).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn dirichlet_end_values() {
        let dat = data(1.3, -0.4, 0.9, 0.2);
        for geom in [DomainGeometry::annulus(1.0, 2.0).unwrap(), DomainGeometry::shell(1.0, 2.0).unwrap()] {
            assert_relative_eq!(state_dirichlet(&geom, &dat).value(1.0), 0.9, max_relative = 1e-15);
            assert!(adjoint_dirichlet(&geom, &dat).value(1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn residuals_vanish_for_all_fields() {
        let dat = data(1.1, -0.7, 0.4, -0.3);
        for geom in [
            DomainGeometry::rectangle(1.5, 0.7).unwrap(),
            DomainGeometry::annulus(0.8, 1.9).unwrap(),
            DomainGeometry::shell(0.6, 1.4).unwrap(),
        ] {
            for variant in [Variant::Dirichlet, Variant::robin(7.5).unwrap()] {
                for field in [FieldKind::State, FieldKind::Adjoint] {
                    let r = boundary_residuals(&profile_for(&geom, &dat, field, variant), 32);
                    assert!(r.boundary_max() < 1e-13, "{geom:?} {variant:?} {field:?}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let dat = data(0.8, 1.2, -0.5, 0.3);
        for geom in [
            DomainGeometry::rectangle(1.2, 1.0).unwrap(),
            DomainGeometry::annulus(1.0, 2.5).unwrap(),
            DomainGeometry::shell(1.0, 2.0).unwrap(),
        ] {
            let (lo, hi) = geom.interval();
            let t = lo + 0.37 * (hi - lo);
            for field in [FieldKind::State, FieldKind::Adjoint] {
                let p = profile_for(&geom, &dat, field, Variant::robin(3.0).unwrap());
                let h = 1e-5;
                let fd = (p.value(t + h) - p.value(t - h)) / (2.0 * h);
                assert_relative_eq!(p.derivative(t), fd, max_relative = 1e-8);
            }
        }
    }
}
