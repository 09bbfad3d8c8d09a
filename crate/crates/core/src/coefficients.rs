//! Six-coefficient expansions of `½‖u − z_d‖²`.
//!
//! For constant data the misfit is a quadratic form in `(g, q, b − z_d)`.
//! The coefficients `k1..k6` multiply `g², q², (b−z_d)², gq, g(b−z_d),
//! q(b−z_d)` together with fixed geometry monomials. Robin coefficients are
//! polynomials of degree two in `1/(α ℓ)` with `ℓ = x0` or `r1`.

use std::f64::consts::PI;

use crate::error::{BenchError, Result};
use crate::problem::{DomainGeometry, GeometryKind, ProblemData, RobinParameter, Variant};
use crate::scalar::{lift, Real};

/// Coefficients `k1..k6` (stored zero-indexed) for one geometry and one
/// boundary condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet<T = f64> {
    pub k: [T; 6],
    pub geometry: GeometryKind,
    /// `1/α`, zero for the Dirichlet variant.
    pub inv_alpha: T,
}

impl<T: Real> CoefficientSet<T> {
    pub fn k1(&self) -> T {
        self.k[0]
    }
    pub fn k2(&self) -> T {
        self.k[1]
    }
    pub fn k3(&self) -> T {
        self.k[2]
    }
    pub fn k4(&self) -> T {
        self.k[3]
    }
    pub fn k5(&self) -> T {
        self.k[4]
    }
    pub fn k6(&self) -> T {
        self.k[5]
    }
}

/// Coefficients at an arbitrary scalar `1/α` (0 gives the Dirichlet table).
pub fn coefficients<T: Real>(geom: &DomainGeometry, inv_alpha: T) -> CoefficientSet<T> {
    let e = inv_alpha / geom.robin_length();
    let e2 = e * e;
    let k = match *geom {
        DomainGeometry::Rectangle { .. } => [
            e * (2.0 / 3.0) + e2 + 2.0 / 15.0,
            e + e2 + 1.0 / 3.0,
            lift(1.0),
            -e * (5.0 / 3.0) - e2 * 2.0 - 5.0 / 12.0,
            e * 2.0 + 2.0 / 3.0,
            -e * 2.0 - 1.0,
        ],
        DomainGeometry::Annulus { r1, r2 } => annulus(r2 / r1, e, e2),
        DomainGeometry::Shell { r1, r2 } => shell(r2 / r1, e, e2),
    };
    CoefficientSet { k, geometry: geom.kind(), inv_alpha }
}

fn annulus<T: Real>(p: f64, e: T, e2: T) -> [T; 6] {
    let l = p.ln();
    let l2 = l * l;
    let k1 = (e / 2.0 - e2 - 1.0 / 12.0
        + (-e * 2.5 + e2 * 3.0 + 5.0 / 8.0) * p.powi(2)
        + (e * (3.5 - 2.0 * l) - e2 * 3.0 + l - 1.25) * p.powi(4)
        + (-e * 1.5 + e * (2.0 * l) + e2 + l2 - 1.5 * l + 17.0 / 24.0) * p.powi(6))
        / 8.0;
    let k2 = (-(e2 * 2.0 - e * 2.0 + 1.0) * p.powi(2) + (e2 * 2.0 + e * (4.0 * l - 2.0) + 2.0 * l2 - 2.0 * l + 1.0) * p.powi(4))
        / 4.0;
    let k3 = lift((-1.0 + p * p) / 2.0);
    let k4 = ((e * 1.5 - e2 * 2.0 - 3.0 / 8.0) * p
        + (e * (2.0 * l - 4.0) + e2 * 4.0 + 1.5 - l) * p.powi(3)
        + (-e * (4.0 * l) + e * 2.5 - e2 * 2.0 - 2.0 * l2 + 2.5 * l - 9.0 / 8.0) * p.powi(5))
        / 4.0;
    let k5 = (e - 0.25 + (-e * 2.0 + 1.0) * p.powi(2) + (e + l - 0.75) * p.powi(4)) / 2.0;
    let k6 = -((-e + 0.5) * p + (e + l - 0.5) * p.powi(3));
    [k1, k2, k3, k4, k5, k6]
}

fn shell<T: Real>(p: f64, e: T, e2: T) -> [T; 6] {
    let k1 = e * (2.0 / 135.0) - e2 / 27.0 - 2.0 / 945.0
        + (-e * (4.0 / 45.0) + e2 / 9.0 + 1.0 / 45.0) * p.powi(3)
        - (-e * 2.0 + 1.0) * (p.powi(5) / 15.0)
        - e2 * (p.powi(6) / 9.0)
        + p.powi(7) / 7.0
        - (e + 1.0) * (2.0 * p.powi(8) / 15.0)
        + (e * 2.0 + e2 + 1.0) * (p.powi(9) / 27.0);
    let k2 = -(-e + e2 + 1.0) / 3.0 + p - (e + 1.0) * p.powi(2) + (e * 2.0 + e2 + 1.0) * (p.powi(3) / 3.0);
    let k3 = lift((-1.0 + p.powi(3)) / 3.0);
    // The second-order term is -2/(9 α² r1²); the symbolic expansion of the
    // misfit rules out the -2/(α² r1²) that appears in some printings.
    let k4 = e * (7.0 / 45.0) - e2 * (2.0 / 9.0) - 7.0 / 180.0
        + (-e * 2.0 + 1.0) * (p.powi(2) / 6.0)
        + (-e + e2 * 4.0 + 1.0) * (p.powi(3) / 9.0)
        - 0.75 * p.powi(4)
        + (e + 1.0) * (11.0 * p.powi(5) / 15.0)
        - (e * 2.0 + e2 + 1.0) * (2.0 * p.powi(6) / 9.0);
    let k5 = e * (2.0 / 9.0) - 2.0 / 45.0 + (-e * 2.0 + 1.0) * (2.0 * p.powi(3) / 9.0) - 0.4 * p.powi(5)
        + (e + 1.0) * (2.0 * p.powi(6) / 9.0);
    let k6 = -(-e * 2.0 + 1.0) / 3.0 + p * p - (e + 1.0) * (2.0 * p.powi(3) / 3.0);
    [k1, k2, k3, k4, k5, k6]
}

pub fn dirichlet_coefficients(geom: &DomainGeometry) -> CoefficientSet {
    coefficients(geom, 0.0)
}

pub fn robin_coefficients(geom: &DomainGeometry, alpha: RobinParameter) -> CoefficientSet {
    coefficients(geom, 1.0 / alpha.value())
}

pub fn coefficients_for(geom: &DomainGeometry, variant: Variant) -> CoefficientSet {
    coefficients(geom, variant.inv_alpha())
}

/// Geometry monomials that multiply `k1..k6`, including the overall
/// prefactor (`y0/2`, `π`, `2π`).
pub fn monomials(geom: &DomainGeometry) -> [f64; 6] {
    match *geom {
        DomainGeometry::Rectangle { x0, y0 } => {
            let s = y0 / 2.0;
            [s * x0.powi(5), s * x0.powi(3), s * x0, s * x0.powi(4), s * x0.powi(3), s * x0.powi(2)]
        }
        DomainGeometry::Annulus { r1, .. } => {
            [PI * r1.powi(6), PI * r1.powi(4), PI * r1.powi(2), PI * r1.powi(5), PI * r1.powi(4), PI * r1.powi(3)]
        }
        DomainGeometry::Shell { r1, r2 } => {
            // Prefactor 2π: the constant-misfit case must give vol·(b−z_d)²/2.
            let s = 2.0 * PI;
            [
                s * r1.powi(7),
                s * r1 * r2.powi(4),
                s * r1.powi(3),
                s * r1.powi(4) * r2 * r2,
                s * r1.powi(5),
                s * r1 * r1 * r2 * r2,
            ]
        }
    }
}

/// `½‖u − z_d‖²` assembled from the coefficients, unchecked and generic.
pub fn misfit_from<T: Real>(geom: &DomainGeometry, set: &CoefficientSet<T>, g: T, q: T, d: T) -> T {
    let m = monomials(geom);
    let terms = [g * g, q * q, d * d, g * q, g * d, q * d];
    let mut acc = T::zero();
    for i in 0..6 {
        acc += set.k[i] * terms[i] * m[i];
    }
    acc
}

/// `½‖u − z_d‖²` for the given data and boundary condition.
pub fn half_squared_misfit(geom: &DomainGeometry, data: &ProblemData, variant: Variant) -> Result<f64> {
    let set = coefficients_for(geom, variant);
    let v = misfit_from(geom, &set, data.g, data.q, data.offset());
    // A squared norm may round slightly below zero when the misfit vanishes.
    let scale = {
        let m = monomials(geom);
        let t = [data.g * data.g, data.q * data.q, data.offset().powi(2), (data.g * data.q).abs(), (data.g * data.offset()).abs(), (data.q * data.offset()).abs()];
        (0..6).map(|i| (set.k[i] * t[i] * m[i]).abs()).sum::<f64>()
    };
    if v < -1e-12 * scale {
        return Err(BenchError::Inconsistent(format!("half squared misfit is negative: {v}")));
    }
    Ok(v.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rectangle_dirichlet_table_is_exact() {
        let c = dirichlet_coefficients(&DomainGeometry::rectangle(3.0, 0.2).unwrap());
        assert_eq!(c.k, [2.0 / 15.0, 1.0 / 3.0, 1.0, -5.0 / 12.0, 2.0 / 3.0, -1.0]);
    }

    #[test]
    fn rectangle_robin_at_unit_alpha_length() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let c = robin_coefficients(&geom, RobinParameter::new(1.0).unwrap());
        assert_relative_eq!(c.k1(), 27.0 / 15.0, max_relative = 1e-15);
    }

    #[test]
    fn third_coefficient_ignores_alpha() {
        for geom in [
            DomainGeometry::rectangle(1.0, 2.0).unwrap(),
            DomainGeometry::annulus(1.0, 2.0).unwrap(),
            DomainGeometry::shell(1.0, 2.0).unwrap(),
        ] {
            let k3 = dirichlet_coefficients(&geom).k3();
            for a in [0.1, 1.0, 1e3, 1e9] {
                assert_eq!(robin_coefficients(&geom, RobinParameter::new(a).unwrap()).k3(), k3);
            }
        }
    }

    #[test]
    fn third_coefficient_values() {
        assert_relative_eq!(dirichlet_coefficients(&DomainGeometry::annulus(1.0, 2.0).unwrap()).k3(), 1.5);
        assert_relative_eq!(dirichlet_coefficients(&DomainGeometry::shell(1.0, 2.0).unwrap()).k3(), 7.0 / 3.0);
    }

    #[test]
    fn constant_misfit_is_half_volume() {
        let data = ProblemData::new(0.0, 0.0, 1.0, 0.0, [1.0; 5]).unwrap();
        for geom in [
            DomainGeometry::rectangle(1.0, 1.0).unwrap(),
            DomainGeometry::annulus(0.7, 1.3).unwrap(),
            DomainGeometry::shell(0.7, 1.3).unwrap(),
        ] {
            let v = half_squared_misfit(&geom, &data, Variant::Dirichlet).unwrap();
            assert_relative_eq!(v, geom.measures().volume / 2.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn zero_misfit() {
        let data = ProblemData::new(0.0, 0.0, 0.4, 0.4, [1.0; 5]).unwrap();
        let geom = DomainGeometry::shell(1.0, 3.0).unwrap();
        assert_eq!(half_squared_misfit(&geom, &data, Variant::robin(2.0).unwrap()).unwrap(), 0.0);
    }
}
