//! Printed large-α limits on the rectangle, transcribed verbatim.
//!
//! Functions with a `_corrected` twin are known misprints; the twin holds the
//! re-derived expression and the printed one is kept for the audit.

use crate::problem::ProblemData;

/// `lim α|g_α,op − g_op|` for the distributed control.
pub fn ctrl_g(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    5.0 * x0 * (-150.0 * m1 * q * x0 + 4.0 * (45.0 * m1 - 2.0) * (b - zd) * x0.powi(4) + 5.0 * q * x0.powi(5)).abs() / (4.0 * (15.0 * m1 + 2.0 * x0.powi(4)).powi(2))
}

/// Re-derived form of [`ctrl_g`].
pub fn ctrl_g_corrected(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    5.0 * x0 * (-150.0 * m1 * q * x0 + 4.0 * (45.0 * m1 - 4.0 * x0.powi(4)) * (b - zd) + 5.0 * q * x0.powi(5)).abs() / (4.0 * (15.0 * m1 + 2.0 * x0.powi(4)).powi(2))
}

/// `lim α|q_α,op − q_op|` for the flux control.
pub fn ctrl_q(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    x0 * (60.0 * g * m2 * x0.powi(2) + 5.0 * g * x0.powi(5) + 12.0 * (6.0 * m2 - x0.powi(3)) * (b - zd)).abs() / (8.0 * (3.0 * m2 + x0.powi(3)).powi(2))
}

/// `α|b_α,op − b_op|`, which does not depend on α.
pub fn ctrl_b(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (g, q) = (d.g, d.q);
    let [_, _, m3, _, _] = d.m;
    x0 * (q - g * x0).abs() / (m3 + x0)
}

/// Source component of `lim α|(g,q)_α,op − (g,q)_op|`.
pub fn ctrl_gq_g(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let w_p1 = 3.0 * (2880.0 * m4 * m5 + 960.0 * m4 * x0.powi(3) + 384.0 * m5 * x0.powi(4) + 3.0 * x0.powi(7)) * (320.0 * m4 * (3.0 * m5 + x0.powi(3)) + 128.0 * m5 * x0.powi(4) + x0.powi(7));
    40.0 * x0 * (b - zd) / w_p1 * (-207360.0 * m4 * m5.powi(2) - 8640.0 * m4 * m5 * x0.powi(3) - 1440.0 * m4 * x0.powi(6) + 18432.0 * m5.powi(2) * x0.powi(4) + 168.0 * m5 * x0.powi(7) + 3.0 * x0.powi(10)).abs()
}

/// Flux component of the simultaneous control limit.
pub fn ctrl_gq_q(x0: f64, _y0: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let w_p1 = 3.0 * (2880.0 * m4 * m5 + 960.0 * m4 * x0.powi(3) + 384.0 * m5 * x0.powi(4) + 3.0 * x0.powi(7)) * (320.0 * m4 * (3.0 * m5 + x0.powi(3)) + 128.0 * m5 * x0.powi(4) + x0.powi(7));
    8.0 * x0 * (b - zd) / w_p1 * (1036800.0 * m4.powi(2) * m5 - 172800.0 * m4.powi(2) * x0.powi(3) - 227520.0 * m4 * m5 * x0.powi(4) - 7080.0 * m4 * x0.powi(7) - 768.0 * m5 * x0.powi(8) + 3.0 * x0.powi(11)).abs()
}

/// `lim α|J1α − J1|` at the respective optima.
pub fn cost_j1(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    x0 * y0 / (192.0 * (15.0 * m1 + 2.0 * x0.powi(4)).powi(2)) * ((40.0 * (b - zd) * x0.powi(3) + 3.0 * q * (40.0 * m1 + 3.0 * x0.powi(4))) * (8.0 * (b - zd) * (45.0 * m1 + x0.powi(4)) + q * x0 * (x0.powi(4) - 180.0 * m1))).abs()
}

/// Re-derived form of [`cost_j1`].
pub fn cost_j1_corrected(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    x0 * y0 / (192.0 * (15.0 * m1 + 2.0 * x0.powi(4)).powi(2)) * ((40.0 * (b - zd) * x0.powi(3) + 3.0 * q * (40.0 * m1 - 3.0 * x0.powi(4))) * (8.0 * (b - zd) * (45.0 * m1 + x0.powi(4)) + q * x0 * (x0.powi(4) - 180.0 * m1))).abs()
}

/// `lim α|J2α − J2|` at the respective optima.
pub fn cost_j2(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    x0.powi(2) * y0 / (128.0 * (3.0 * m2 + x0.powi(3)).powi(2)) * ((-4.0 * (b - zd) * x0 + g * (8.0 * m2 + x0.powi(3))) * (12.0 * (b - zd) * (x0.powi(3) + 12.0 * m2) + g * x0.powi(2) * (48.0 * m2 + x0.powi(3)))).abs()
}

/// `lim α|J3α − J3|` at the respective optima.
pub fn cost_j3(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (g, q, zd) = (d.g, d.q, d.z_d);
    let [_, _, m3, _, _] = d.m;
    (m3 * x0 * y0 * (g * x0 - q) * (2.0 * g * x0.powi(2) - 3.0 * q * x0 - 6.0 * zd)).abs() / (6.0 * (m3 + x0))
}

/// `lim α|J4α − J4|` at the respective optima.
pub fn cost_j4(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    64.0 * x0.powi(3) * y0 * (b - zd).powi(2) * (120.0 * m4 + 80.0 * m5 * x0 + x0.powi(4)) / (3.0 * (960.0 * m4 * m5 + 320.0 * m4 * x0.powi(3) + 128.0 * m5 * x0.powi(4) + x0.powi(7)).powi(2)) * (180.0 * m4 * m5 + 15.0 * m4 * x0.powi(3) + 4.0 * m5 * x0.powi(4) + x0.powi(7))
}

/// Re-derived form of [`cost_j4`].
pub fn cost_j4_corrected(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    64.0 * x0.powi(3) * y0 * (b - zd).powi(2) * (120.0 * m4 + 80.0 * m5 * x0 + x0.powi(4)) / (3.0 * (960.0 * m4 * m5 + 320.0 * m4 * x0.powi(3) + 128.0 * m5 * x0.powi(4) + x0.powi(7)).powi(2)) * (180.0 * m4 * m5 + 15.0 * m4 * x0.powi(3) + 4.0 * m5 * x0.powi(4) + x0.powi(7) / 48.0)
}

/// `lim α‖p_α − p‖` in the L² norm of the domain.
pub fn adjoint(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (g, q, b, zd) = (d.g, d.q, d.b, d.z_d);
    (x0.powi(3) * y0 / 180.0 * (180.0 * (b + zd).powi(2) + 129.0 * q.powi(2) * x0.powi(2) - 208.0 * g * q * x0.powi(3) + 84.0 * g.powi(2) * x0.powi(4) - 60.0 * (b - zd) * (5.0 * q * x0 - 4.0 * g * x0.powi(2))).abs()).sqrt()
}

/// Re-derived form of [`adjoint`].
pub fn adjoint_corrected(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    let (g, q, b, zd) = (d.g, d.q, d.b, d.z_d);
    (x0.powi(3) * y0 / 180.0 * (180.0 * (b - zd).powi(2) + 129.0 * q.powi(2) * x0.powi(2) - 208.0 * g * q * x0.powi(3) + 84.0 * g.powi(2) * x0.powi(4) - 60.0 * (b - zd) * (5.0 * q * x0 - 4.0 * g * x0.powi(2))).abs()).sqrt()
}

/// `α‖u_α − u‖`, which does not depend on α.
pub fn state_gap(x0: f64, y0: f64, d: &ProblemData) -> f64 {
    (x0 * y0).sqrt() * (d.q - d.g * x0).abs()
}
