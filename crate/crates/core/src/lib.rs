//! Closed-form benchmark for steady heat-conduction optimal control.
//!
//! Three geometries (rectangle, annulus, spherical shell) reduce to a 1D
//! two-point problem. For each one the crate provides the Dirichlet and Robin
//! state and adjoint fields, the quadratic-form coefficients of the tracking
//! misfit, the optimal controls and values of the four control problems, the
//! large-α limit constants, and the numeric oracles that audit all of them.

// `!(x > 0.0)` is how input guards reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coefficients;
pub mod control;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod problem;
pub mod profile;
pub mod scalar;
pub mod sweep;

pub use coefficients::{
    coefficients_for, dirichlet_coefficients, half_squared_misfit, robin_coefficients, CoefficientSet,
};
pub use control::{
    cost_quadratic, evaluate_cost, optimal_control, optimal_distributed, optimal_flux, optimal_simultaneous,
    optimal_temperature, ControlKind, ControlSolution, ControlValue, PairQuadraticCost, QuadraticCost,
};
pub use error::{BenchError, Result};
pub use limits::{LimitConstant, LimitName};
pub use problem::{DomainGeometry, GeometryKind, Measures, ProblemData, RobinParameter, Variant};
pub use profile::{FieldKind, Profile};
pub use sweep::{alpha_sweep, fit_order, geometric_grid, OrderFit, Quantity, RateFit, SweepRecord};
