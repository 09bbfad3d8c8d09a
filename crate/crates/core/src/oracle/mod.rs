//! Independent numeric checks: a finite-difference BVP solver, Simpson
//! quadrature and exact-quadratic minimizers.
//!
//! Nothing here reads a coefficient table or an optimality formula; the
//! oracles only see the problem statement.

pub mod fd;
pub mod grid;
pub mod minimize;
pub mod quadrature;

pub use fd::{solve_adjoint, solve_bvp, solve_chained, DiscreteSolution};
pub use grid::Grid1D;
pub use minimize::{minimize_pair_quadratic, minimize_scalar_quadratic, PairMinimum, ScalarMinimum};
pub use quadrature::{simpson, weighted_l2};
