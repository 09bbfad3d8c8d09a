//! Large-α limit constants `lim α·|Robin − Dirichlet|`.
//!
//! Each constant is available three ways:
//!
//! * the printed closed form, transcribed verbatim (submodules);
//! * a re-derived closed form where the printed one is a proven misprint;
//! * [`derivative_limit`], the exact `1/α`-derivative at `1/α = 0` obtained by
//!   running the Robin closed forms on dual numbers.
//!
//! The sweep extrapolation in [`crate::sweep`] is the fourth, purely numeric,
//! estimate.

pub mod annulus;
pub mod rectangle;
pub mod shell;

use std::fmt;

use num_dual::Dual64;

use crate::control::{theorem_pair, theorem_scalar, ControlKind};
use crate::error::Result;
use crate::oracle::quadrature::weighted_l2;
use crate::problem::{DomainGeometry, GeometryKind, ProblemData};
use crate::profile::{adjoint, state};
use crate::scalar::seeded_inv_alpha;

/// Which gap a limit constant describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LimitName {
    StateGap,
    AdjointGap,
    ControlG,
    ControlQ,
    ControlB,
    PairG,
    PairQ,
    CostJ1,
    CostJ2,
    CostJ3,
    CostJ4,
}

impl LimitName {
    pub const ALL: [LimitName; 11] = [
        Self::StateGap,
        Self::AdjointGap,
        Self::ControlG,
        Self::ControlQ,
        Self::ControlB,
        Self::PairG,
        Self::PairQ,
        Self::CostJ1,
        Self::CostJ2,
        Self::CostJ3,
        Self::CostJ4,
    ];

    /// Geometry-independent key, e.g. `ctrl_gq_q` or `cost_J2`.
    pub fn key(self) -> &'static str {
        match self {
            Self::StateGap => "state",
            Self::AdjointGap => "adjoint",
            Self::ControlG => "ctrl_g",
            Self::ControlQ => "ctrl_q",
            Self::ControlB => "ctrl_b",
            Self::PairG => "ctrl_gq_g",
            Self::PairQ => "ctrl_gq_q",
            Self::CostJ1 => "cost_J1",
            Self::CostJ2 => "cost_J2",
            Self::CostJ3 => "cost_J3",
            Self::CostJ4 => "cost_J4",
        }
    }

    /// Conventional name on a given geometry (`K1`..`K3`, `L1`..`L3` for the
    /// field gaps, the key otherwise).
    pub fn label(self, kind: GeometryKind) -> String {
        let idx = match kind {
            GeometryKind::Rectangle => 1,
            GeometryKind::Annulus => 2,
            GeometryKind::Shell => 3,
        };
        match self {
            Self::StateGap => format!("K{idx}"),
            Self::AdjointGap => format!("L{idx}"),
            other => other.key().to_string(),
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.key() == key)
    }

    /// Control problem behind a control or cost gap.
    pub fn control_kind(self) -> Option<ControlKind> {
        match self {
            Self::ControlG | Self::CostJ1 => Some(ControlKind::Distributed),
            Self::ControlQ | Self::CostJ2 => Some(ControlKind::Flux),
            Self::ControlB | Self::CostJ3 => Some(ControlKind::Temperature),
            Self::PairG | Self::PairQ | Self::CostJ4 => Some(ControlKind::Simultaneous),
            Self::StateGap | Self::AdjointGap => None,
        }
    }
}

impl fmt::Display for LimitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One limit constant evaluated at a geometry and data set.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitConstant {
    pub name: LimitName,
    pub geometry: DomainGeometry,
    pub data: ProblemData,
    /// The printed expression, evaluated as written.
    pub printed: f64,
    /// Value in use: the re-derived expression when the printed one is a
    /// known misprint, otherwise equal to `printed`.
    pub value: f64,
    /// Short description of the printed expression, used in audit findings.
    pub printed_form: &'static str,
    /// The misprint, if one is known.
    pub erratum: Option<&'static str>,
}

impl LimitConstant {
    pub fn label(&self) -> String {
        self.name.label(self.geometry.kind())
    }

    pub fn is_corrected(&self) -> bool {
        self.erratum.is_some()
    }
}

type Printed = fn(f64, f64, &ProblemData) -> f64;

const PAIR_SIGN_ERRATUM: &str =
    "(b - z_d) sits outside the absolute value, so the printed limit is negative when b < z_d; the limit is its magnitude";

struct Entry {
    printed: Printed,
    corrected: Option<(Printed, &'static str)>,
    form: &'static str,
}

fn entry(kind: GeometryKind, name: LimitName) -> Entry {
    use LimitName::*;
    let plain = |printed: Printed, form| Entry { printed, corrected: None, form };
    let fixed = |printed: Printed, corrected: Printed, erratum, form| Entry {
        printed,
        corrected: Some((corrected, erratum)),
        form,
    };
    match kind {
        GeometryKind::Rectangle => match name {
            StateGap => plain(rectangle::state_gap, "K1 = (x0 y0)^(1/2) |q - g x0|"),
            AdjointGap => fixed(
                rectangle::adjoint,
                rectangle::adjoint_corrected,
                "180 (b + z_d)^2 should read 180 (b - z_d)^2",
                "L1 = {x0^3 y0/180 |180 (b + z_d)^2 + 129 q^2 x0^2 - 208 g q x0^3 + 84 g^2 x0^4 - 60 (b - z_d)(5 q x0 - 4 g x0^2)|}^(1/2)",
            ),
            ControlG => fixed(
                rectangle::ctrl_g,
                rectangle::ctrl_g_corrected,
                "4 (45 M1 - 2)(b - z_d) x0^4 should read 4 (45 M1 - 4 x0^4)(b - z_d)",
                "5 x0 |-150 M1 q x0 + 4 (45 M1 - 2)(b - z_d) x0^4 + 5 q x0^5| / (4 (15 M1 + 2 x0^4)^2)",
            ),
            ControlQ => plain(
                rectangle::ctrl_q,
                "x0 |60 g M2 x0^2 + 5 g x0^5 + 12 (6 M2 - x0^3)(b - z_d)| / (8 (3 M2 + x0^3)^2)",
            ),
            ControlB => plain(rectangle::ctrl_b, "x0 |q - g x0| / (M3 + x0)"),
            PairG => fixed(
                rectangle::ctrl_gq_g,
                |a: f64, b: f64, d: &ProblemData| rectangle::ctrl_gq_g(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "40 x0 (b - z_d) |...| / P1 (pair, source component)",
            ),
            PairQ => fixed(
                rectangle::ctrl_gq_q,
                |a: f64, b: f64, d: &ProblemData| rectangle::ctrl_gq_q(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "8 x0 (b - z_d) |...| / P1 (pair, flux component)",
            ),
            CostJ1 => fixed(
                rectangle::cost_j1,
                rectangle::cost_j1_corrected,
                "3 q (40 M1 + 3 x0^4) should read 3 q (40 M1 - 3 x0^4)",
                "x0 y0 |(40 (b - z_d) x0^3 + 3 q (40 M1 + 3 x0^4))(8 (b - z_d)(45 M1 + x0^4) + q x0 (x0^4 - 180 M1))| / (192 (15 M1 + 2 x0^4)^2)",
            ),
            CostJ2 => plain(
                rectangle::cost_j2,
                "x0^2 y0 |(-4 (b - z_d) x0 + g (8 M2 + x0^3))(12 (b - z_d)(x0^3 + 12 M2) + g x0^2 (48 M2 + x0^3))| / (128 (3 M2 + x0^3)^2)",
            ),
            CostJ3 => plain(rectangle::cost_j3, "|M3 x0 y0 (g x0 - q)(2 g x0^2 - 3 q x0 - 6 z_d)| / (6 (M3 + x0))"),
            CostJ4 => fixed(
                rectangle::cost_j4,
                rectangle::cost_j4_corrected,
                "last factor (180 M4 M5 + 15 M4 x0^3 + 4 M5 x0^4 + x0^7) should end in x0^7/48",
                "64 x0^3 y0 (b - z_d)^2 (120 M4 + 80 M5 x0 + x0^4)(180 M4 M5 + 15 M4 x0^3 + 4 M5 x0^4 + x0^7) / (3 (960 M4 M5 + 320 M4 x0^3 + 128 M5 x0^4 + x0^7)^2)",
            ),
        },
        GeometryKind::Annulus => match name {
            StateGap => plain(annulus::state_gap, "K2 = pi^(1/2) (r2^2 - r1^2)^(1/2) |2 q r2 - g (r2^2 - r1^2)| / (2 r1)"),
            AdjointGap => fixed(
                annulus::adjoint,
                annulus::adjoint_corrected,
                "prefactor sign: the bracket is negative, so the prefactor must be -pi/(768 r1^2)",
                "L2 = {pi/(768 r1^2) [...]}^(1/2)",
            ),
            ControlG => plain(annulus::ctrl_g, "12 |...| / G2 (annulus g-control)"),
            ControlQ => plain(annulus::ctrl_q, "|...| / Q2 (annulus q-control)"),
            ControlB => plain(
                annulus::ctrl_b,
                "|(r1^2 - r2^2)(g (r1^2 - r2^2) + 2 q r2) / (2 r1 (-2 M3 r1 + r1^2 - r2^2))|",
            ),
            PairG => fixed(
                annulus::ctrl_gq_g,
                |a: f64, b: f64, d: &ProblemData| annulus::ctrl_gq_g(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "96 (b - z_d) |...| / P2 (pair, source component)",
            ),
            PairQ => fixed(
                annulus::ctrl_gq_q,
                |a: f64, b: f64, d: &ProblemData| annulus::ctrl_gq_q(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "64 (b - z_d) |...| / P2 (pair, flux component)",
            ),
            CostJ1 => fixed(
                annulus::cost_j1,
                annulus::cost_j1_corrected,
                "operator missing between 768 M1 q r1^2 r2^3 log(r2/r1) and 768 b M1 r1^4; it is a '+'",
                "pi |[...][... 768 M1 q r1^2 r2^3 log(r2/r1) 768 b M1 r1^4 ...]| / J12",
            ),
            CostJ2 => plain(annulus::cost_j2, "pi |[...][...]| / J22"),
            CostJ3 => plain(
                annulus::cost_j3,
                "pi |M3 (g (r1^2 - r2^2) + 2 q r2)| |...| / |8 r1 (-2 M3 r1 + r1^2 - r2^2)|",
            ),
            CostJ4 => plain(annulus::cost_j4, "4 pi (b - z_d)^2 |[...][...]| / J42"),
        },
        GeometryKind::Shell => match name {
            StateGap => plain(shell::state_gap, "K3 = (4 pi (r2^3 - r1^3)(3 q r2^2 + g (r1^3 - r2^3))^2 / (27 r1^4))^(1/2)"),
            AdjointGap => plain(shell::adjoint, "L3 = {...}^(1/2)"),
            ControlG => plain(shell::ctrl_g, "|...| / G3 (shell g-control)"),
            ControlQ => plain(shell::ctrl_q, "|...| / Q3 (shell q-control)"),
            ControlB => plain(shell::ctrl_b, "shell b-control gap times alpha"),
            PairG => fixed(
                shell::ctrl_gq_g,
                |a: f64, b: f64, d: &ProblemData| shell::ctrl_gq_g(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "(b - z_d) |...| / P3 (pair, source component)",
            ),
            PairQ => fixed(
                shell::ctrl_gq_q,
                |a: f64, b: f64, d: &ProblemData| shell::ctrl_gq_q(a, b, d).abs(),
                PAIR_SIGN_ERRATUM,
                "(b - z_d) |...| / P3 (pair, flux component)",
            ),
            CostJ1 => fixed(
                shell::cost_j1,
                shell::cost_j1_corrected,
                "q (2520 M1 r1^3 r2^2 ...) should read q (-2520 M1 r1^3 r2^2 ...), and 27 q r2^10 should read 27 r2^10",
                "|q (2520 M1 r1^3 r2^2 + ...) ... 27 q r2^10 ...| / J13",
            ),
            CostJ2 => plain(shell::cost_j2, "|...| / J23"),
            CostJ3 => fixed(
                shell::cost_j3,
                shell::cost_j3_corrected,
                "z_d terms follow the +G6 q r2^2 z_d / r1 sign misprint of the optimal value",
                "shell J3 limit with printed z_d terms",
            ),
            CostJ4 => fixed(
                shell::cost_j4,
                shell::cost_j4_corrected,
                "prefactor is missing (r2 - r1)^3",
                "|...| / J43 (shell J4)",
            ),
        },
    }
}

/// Evaluate one limit constant, printed and in use.
pub fn limit_constant(geom: &DomainGeometry, data: &ProblemData, name: LimitName) -> LimitConstant {
    let (a, b) = match *geom {
        DomainGeometry::Rectangle { x0, y0 } => (x0, y0),
        DomainGeometry::Annulus { r1, r2 } | DomainGeometry::Shell { r1, r2 } => (r1, r2),
    };
    let e = entry(geom.kind(), name);
    let printed = (e.printed)(a, b, data);
    let (value, erratum) = match e.corrected {
        Some((f, why)) => (f(a, b, data), Some(why)),
        None => (printed, None),
    };
    LimitConstant { name, geometry: *geom, data: *data, printed, value, printed_form: e.form, erratum }
}

/// `K1`, `K2` or `K3`.
pub fn state_gap_constant(geom: &DomainGeometry, data: &ProblemData) -> LimitConstant {
    limit_constant(geom, data, LimitName::StateGap)
}

/// `L1`, `L2` or `L3`.
pub fn adjoint_gap_limit(geom: &DomainGeometry, data: &ProblemData) -> LimitConstant {
    limit_constant(geom, data, LimitName::AdjointGap)
}

/// Control limits for one problem; the pair problem yields two constants.
pub fn control_gap_limit(geom: &DomainGeometry, data: &ProblemData, kind: ControlKind) -> Vec<LimitConstant> {
    let names: &[LimitName] = match kind {
        ControlKind::Distributed => &[LimitName::ControlG],
        ControlKind::Flux => &[LimitName::ControlQ],
        ControlKind::Temperature => &[LimitName::ControlB],
        ControlKind::Simultaneous => &[LimitName::PairG, LimitName::PairQ],
    };
    names.iter().map(|&n| limit_constant(geom, data, n)).collect()
}

pub fn cost_gap_limit(geom: &DomainGeometry, data: &ProblemData, kind: ControlKind) -> LimitConstant {
    let name = match kind {
        ControlKind::Distributed => LimitName::CostJ1,
        ControlKind::Flux => LimitName::CostJ2,
        ControlKind::Temperature => LimitName::CostJ3,
        ControlKind::Simultaneous => LimitName::CostJ4,
    };
    limit_constant(geom, data, name)
}

/// Every constant for one geometry, in [`LimitName::ALL`] order.
pub fn all_limits(geom: &DomainGeometry, data: &ProblemData) -> Vec<LimitConstant> {
    LimitName::ALL.iter().map(|&n| limit_constant(geom, data, n)).collect()
}

/// Nodes used for the field-gap norms in [`derivative_limit`].
const DERIVATIVE_QUADRATURE_NODES: usize = 2000;

/// `|d/dε quantity|` at `ε = 1/α = 0`, via dual numbers.
///
/// Robin quantities are smooth in `ε` and equal the Dirichlet ones at
/// `ε = 0`, so this derivative is exactly `lim α·|Robin − Dirichlet|`. For the
/// field gaps the derivative field is integrated with Simpson's rule.
pub fn derivative_limit(geom: &DomainGeometry, data: &ProblemData, name: LimitName) -> Result<f64> {
    let eps = seeded_inv_alpha();
    let field_norm = |f: &dyn Fn(f64) -> Dual64| weighted_l2(geom, |t| f(t).eps, DERIVATIVE_QUADRATURE_NODES).sqrt();
    let v = match name {
        LimitName::StateGap => {
            let u = state(geom, data, eps);
            field_norm(&|t| u.value(t))
        }
        LimitName::AdjointGap => {
            let p = adjoint(geom, data, eps);
            field_norm(&|t| p.value(t))
        }
        LimitName::ControlG | LimitName::ControlQ | LimitName::ControlB => {
            theorem_scalar(geom, data, name.control_kind().unwrap(), eps)?.0.eps.abs()
        }
        LimitName::CostJ1 | LimitName::CostJ2 | LimitName::CostJ3 => {
            theorem_scalar(geom, data, name.control_kind().unwrap(), eps)?.1.eps.abs()
        }
        LimitName::PairG => theorem_pair(geom, data, eps)?.0 .0.eps.abs(),
        LimitName::PairQ => theorem_pair(geom, data, eps)?.0 .1.eps.abs(),
        LimitName::CostJ4 => theorem_pair(geom, data, eps)?.1.eps.abs(),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_square_temperature_limit() {
        let data = ProblemData::new(0.0, 1.0, 0.0, 0.0, [1.0; 5]).unwrap();
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        assert_relative_eq!(limit_constant(&geom, &data, LimitName::ControlB).value, 0.5);
    }

    #[test]
    fn balanced_source_has_no_state_gap() {
        let geom = DomainGeometry::rectangle(2.0, 1.0).unwrap();
        let data = ProblemData::new(1.5, 3.0, 0.0, 0.0, [1.0; 5]).unwrap();
        assert_eq!(state_gap_constant(&geom, &data).value, 0.0);
    }

    #[test]
    fn unit_square_state_gap() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        let data = ProblemData::new(0.0, 2.0, 0.0, 0.0, [1.0; 5]).unwrap();
        assert_relative_eq!(state_gap_constant(&geom, &data).value, 2.0);
    }

    #[test]
    fn labels() {
        assert_eq!(LimitName::StateGap.label(GeometryKind::Annulus), "K2");
        assert_eq!(LimitName::AdjointGap.label(GeometryKind::Shell), "L3");
        assert_eq!(LimitName::from_key("cost_J4"), Some(LimitName::CostJ4));
    }

    #[test]
    fn in_use_constants_match_the_derivative_route() {
        let data = ProblemData::new(0.7, -1.1, 0.4, -0.9, [0.6, 1.3, 0.8, 1.7, 0.5]).unwrap();
        for geom in [
            DomainGeometry::rectangle(1.3, 0.6).unwrap(),
            DomainGeometry::annulus(0.8, 1.9).unwrap(),
            DomainGeometry::shell(0.9, 1.6).unwrap(),
        ] {
            for name in LimitName::ALL {
                let c = limit_constant(&geom, &data, name);
                let d = derivative_limit(&geom, &data, name).unwrap();
                assert!((c.value - d).abs() <= 1e-8 * d.abs(), "{} {}: {} vs {d}", geom.kind(), c.label(), c.value);
            }
        }
    }
}
