//! Geometries, constant problem data and the measures every cost needs.
//!
//! All three domains reduce to a 1D problem: the rectangle's fields depend
//! on `x` only, and the annulus and shell fields depend on the radius only.
//! The coordinate interval is `[0, x0]` or `[r1, r2]`, with the `Γ1` (Dirichlet
//! or Robin) end first and the `Γ2` (flux) end second.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{BenchError, Result};

/// Which of the three closed-form geometries a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeometryKind {
    Rectangle,
    Annulus,
    Shell,
}

impl GeometryKind {
    pub const ALL: [GeometryKind; 3] = [Self::Rectangle, Self::Annulus, Self::Shell];

    pub fn name(self) -> &'static str {
        match self {
            Self::Rectangle => "rectangle",
            Self::Annulus => "annulus",
            Self::Shell => "shell",
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated benchmark domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainGeometry {
    /// `(0, x0) × (0, y0)`; `Γ1` is `x = 0`, `Γ2` is `x = x0`.
    Rectangle { x0: f64, y0: f64 },
    /// `r1 < |x| < r2` in the plane; `Γ1` is the inner circle.
    Annulus { r1: f64, r2: f64 },
    /// `r1 < |x| < r2` in space; `Γ1` is the inner sphere.
    Shell { r1: f64, r2: f64 },
}

/// Volume of the domain and areas of the two boundary pieces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measures {
    pub volume: f64,
    pub area_gamma1: f64,
    pub area_gamma2: f64,
}

impl DomainGeometry {
    pub fn rectangle(x0: f64, y0: f64) -> Result<Self> {
        let g = Self::Rectangle { x0, y0 };
        g.validate()?;
        Ok(g)
    }

    pub fn annulus(r1: f64, r2: f64) -> Result<Self> {
        let g = Self::Annulus { r1, r2 };
        g.validate()?;
        Ok(g)
    }

    pub fn shell(r1: f64, r2: f64) -> Result<Self> {
        let g = Self::Shell { r1, r2 };
        g.validate()?;
        Ok(g)
    }

    /// Re-checks the invariants; useful after building the enum literally.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Rectangle { x0, y0 } => {
                if !(x0.is_finite() && x0 > 0.0) {
                    return Err(BenchError::Constraint(format!("rectangle requires x0 > 0, got {x0}")));
                }
                if !(y0.is_finite() && y0 > 0.0) {
                    return Err(BenchError::Constraint(format!("rectangle requires y0 > 0, got {y0}")));
                }
            }
            Self::Annulus { r1, r2 } | Self::Shell { r1, r2 } => {
                if !(r1.is_finite() && r1 > 0.0) {
                    return Err(BenchError::Constraint(format!(
                        "{} requires r1 > 0, got {r1}",
                        self.kind()
                    )));
                }
                if !(r2.is_finite() && r2 > r1) {
                    return Err(BenchError::Constraint(format!(
                        "{} requires r1 < r2, got r1 = {r1}, r2 = {r2}",
                        self.kind()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> GeometryKind {
        match self {
            Self::Rectangle { .. } => GeometryKind::Rectangle,
            Self::Annulus { .. } => GeometryKind::Annulus,
            Self::Shell { .. } => GeometryKind::Shell,
        }
    }

    /// Coordinate interval `(lo, hi)`: `Γ1` sits at `lo`, `Γ2` at `hi`.
    pub fn interval(&self) -> (f64, f64) {
        match *self {
            Self::Rectangle { x0, .. } => (0.0, x0),
            Self::Annulus { r1, r2 } | Self::Shell { r1, r2 } => (r1, r2),
        }
    }

    /// Length that scales `1/α` in the Robin corrections: `x0` or `r1`.
    pub fn robin_length(&self) -> f64 {
        match *self {
            Self::Rectangle { x0, .. } => x0,
            Self::Annulus { r1, .. } | Self::Shell { r1, .. } => r1,
        }
    }

    /// Weight `w` of the reduced operator `-(1/w)(w v')'`: 1, r or r².
    pub fn operator_weight(&self, t: f64) -> f64 {
        match self {
            Self::Rectangle { .. } => 1.0,
            Self::Annulus { .. } => t,
            Self::Shell { .. } => t * t,
        }
    }

    /// Jacobian that turns a 1D integral over the interval into a volume
    /// integral: `y0`, `2πr` or `4πr²`.
    pub fn volume_weight(&self, t: f64) -> f64 {
        match *self {
            Self::Rectangle { y0, .. } => y0,
            Self::Annulus { .. } => 2.0 * PI * t,
            Self::Shell { .. } => 4.0 * PI * t * t,
        }
    }

    pub fn measures(&self) -> Measures {
        match *self {
            Self::Rectangle { x0, y0 } => Measures { volume: x0 * y0, area_gamma1: y0, area_gamma2: y0 },
            Self::Annulus { r1, r2 } => Measures {
                volume: PI * (r2 * r2 - r1 * r1),
                area_gamma1: 2.0 * PI * r1,
                area_gamma2: 2.0 * PI * r2,
            },
            Self::Shell { r1, r2 } => Measures {
                volume: 4.0 * PI * (r2.powi(3) - r1.powi(3)) / 3.0,
                area_gamma1: 4.0 * PI * r1 * r1,
                area_gamma2: 4.0 * PI * r2 * r2,
            },
        }
    }
}

/// Shorthand for [`DomainGeometry::measures`].
pub fn domain_measures(geom: &DomainGeometry) -> Measures {
    geom.measures()
}

/// Constant data `g, q, b, z_d` and the regularization weights `M1..M5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemData {
    /// Internal energy (source) in the domain.
    pub g: f64,
    /// Heat flux on `Γ2`.
    pub q: f64,
    /// Temperature datum on or near `Γ1`.
    pub b: f64,
    /// Desired temperature.
    pub z_d: f64,
    /// `M1..M5`, indexed from zero.
    pub m: [f64; 5],
}

impl ProblemData {
    pub fn new(g: f64, q: f64, b: f64, z_d: f64, m: [f64; 5]) -> Result<Self> {
        let d = Self { g, q, b, z_d, m };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("g", self.g), ("q", self.q), ("b", self.b), ("z_d", self.z_d)] {
            if !v.is_finite() {
                return Err(BenchError::Constraint(format!("{name} must be finite, got {v}")));
            }
        }
        for (i, &m) in self.m.iter().enumerate() {
            if !(m.is_finite() && m > 0.0) {
                return Err(BenchError::Constraint(format!("M{} must be positive, got {m}", i + 1)));
            }
        }
        Ok(())
    }

    /// `b - z_d`, the misfit on `Γ1` that drives most formulas.
    pub fn offset(&self) -> f64 {
        self.b - self.z_d
    }

    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    pub fn with_q(mut self, q: f64) -> Self {
        self.q = q;
        self
    }

    pub fn with_b(mut self, b: f64) -> Self {
        self.b = b;
        self
    }
}

/// Heat-transfer coefficient on `Γ1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RobinParameter(f64);

impl RobinParameter {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(BenchError::Constraint(format!("alpha must be positive and finite, got {alpha}")));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Boundary condition on `Γ1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Variant {
    Dirichlet,
    Robin(RobinParameter),
}

impl Variant {
    pub fn robin(alpha: f64) -> Result<Self> {
        RobinParameter::new(alpha).map(Self::Robin)
    }

    /// `1/α`, or 0 for Dirichlet. Every Robin closed form reduces to its
    /// Dirichlet counterpart at `1/α = 0`.
    pub fn inv_alpha(self) -> f64 {
        match self {
            Self::Dirichlet => 0.0,
            Self::Robin(a) => 1.0 / a.value(),
        }
    }

    pub fn label(self) -> String {
        match self {
            Self::Dirichlet => "dirichlet".to_string(),
            Self::Robin(a) => format!("robin:{}", a.value()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_square_measures() {
        let m = DomainGeometry::rectangle(1.0, 1.0).unwrap().measures();
        assert_eq!((m.volume, m.area_gamma1, m.area_gamma2), (1.0, 1.0, 1.0));
    }

    #[test]
    fn annulus_and_shell_measures() {
        let a = DomainGeometry::annulus(1.0, 2.0).unwrap().measures();
        assert_relative_eq!(a.volume, 3.0 * PI, max_relative = 1e-15);
        assert_relative_eq!(a.area_gamma1, 2.0 * PI);
        assert_relative_eq!(a.area_gamma2, 4.0 * PI);
        let s = DomainGeometry::shell(1.0, 2.0).unwrap().measures();
        assert_relative_eq!(s.volume, 28.0 * PI / 3.0, max_relative = 1e-15);
        assert_relative_eq!(s.area_gamma1, 4.0 * PI);
        assert_relative_eq!(s.area_gamma2, 16.0 * PI);
    }

    #[test]
    fn degenerate_geometry_is_rejected() {
        assert!(DomainGeometry::annulus(1.0, 1.0).is_err());
        assert!(DomainGeometry::shell(0.0, 1.0).is_err());
        let err = DomainGeometry::rectangle(0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("x0 > 0"));
    }

    #[test]
    fn data_and_alpha_invariants() {
        assert!(ProblemData::new(0.0, 0.0, 0.0, 0.0, [1.0, 1.0, 0.0, 1.0, 1.0]).is_err());
        assert!(ProblemData::new(f64::NAN, 0.0, 0.0, 0.0, [1.0; 5]).is_err());
        assert!(RobinParameter::new(0.0).is_err());
        assert!(RobinParameter::new(f64::INFINITY).is_err());
        assert_eq!(Variant::Dirichlet.inv_alpha(), 0.0);
        assert_eq!(Variant::robin(4.0).unwrap().inv_alpha(), 0.25);
    }
}
