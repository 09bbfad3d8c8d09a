//! Scalar abstraction for the closed forms.
//!
//! Every closed form is written once over [`Real`]. With `f64` it is an
//! ordinary evaluation; with a dual number seeded in `1/α` the same code
//! yields the exact derivative with respect to `1/α`, which is the
//! `α → ∞` limit of `α · (Robin − Dirichlet)`.

use num_dual::{Dual64, DualNum};

/// Anything the closed forms can be evaluated on.
pub trait Real: DualNum<Primitive = f64> + Copy {}

impl<T: DualNum<Primitive = f64> + Copy> Real for T {}

/// Lift a constant into the scalar type.
#[inline]
pub fn lift<T: Real>(v: f64) -> T {
    T::from(v)
}

/// `1/α` seeded for differentiation at `1/α = 0`.
pub fn seeded_inv_alpha() -> Dual64 {
    Dual64::new(0.0, 1.0)
}
