//! Printed large-α limits on the annulus, transcribed verbatim.
//!
//! `l` is `ln(r2/r1)`. The denominators named in the printed text are bound to
//! locals (`w_g2`, `w_q2`, ...) before the main expression.

use std::f64::consts::PI;

use crate::problem::ProblemData;

/// `lim α‖p_α − p‖` in the L² norm of the domain.
pub fn adjoint(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, b, zd) = (d.g, d.q, d.b, d.z_d);
    let l = (r2 / r1).ln();
    (PI / (768.0 * r1.powi(2)) * ((r1.powi(2) - r2.powi(2)) * (192.0 * b.powi(2) * (r1.powi(2) - r2.powi(2)).powi(2) + 96.0 * b * (r1.powi(2) - r2.powi(2)) * (g * (r1.powi(4) - 4.0 * r1.powi(2) * r2.powi(2) + 3.0 * r2.powi(4)) + 3.0 * q * r1.powi(2) * r2 - 5.0 * q * r2.powi(3) - 4.0 * r1.powi(2) * zd + 4.0 * r2.powi(2) * zd) + g.powi(2) * (13.0 * r1.powi(4) - 80.0 * r1.powi(2) * r2.powi(2) + 115.0 * r2.powi(4)) * (r1.powi(2) - r2.powi(2)).powi(2) + 4.0 * g * (r1.powi(2) - r2.powi(2)) * (q * (19.0 * r1.powi(4) * r2 - 92.0 * r1.powi(2) * r2.powi(3) + 97.0 * r2.powi(5)) - 24.0 * zd * (r1.powi(4) - 4.0 * r1.powi(2) * r2.powi(2) + 3.0 * r2.powi(4))) + 8.0 * (q.powi(2) * (14.0 * r1.powi(4) * r2.powi(2) - 49.0 * r1.powi(2) * r2.powi(4) + 41.0 * r2.powi(6)) - 12.0 * q * r2 * zd * (3.0 * r1.powi(4) - 8.0 * r1.powi(2) * r2.powi(2) + 5.0 * r2.powi(4)) + 24.0 * zd.powi(2) * (r1.powi(2) - r2.powi(2)).powi(2))) + 24.0 * r2.powi(3) * l * (16.0 * b * (r1.powi(2) - r2.powi(2)) * (g * r2 * (r2.powi(2) - r1.powi(2)) + q * (r1.powi(2) - 2.0 * r2.powi(2))) + g.powi(2) * r2 * (12.0 * r2.powi(2) - 5.0 * r1.powi(2)) * (r1.powi(2) - r2.powi(2)).powi(2) + 4.0 * g * (r1.powi(2) - r2.powi(2)) * (q * (r1.powi(4) - 9.0 * r1.powi(2) * r2.powi(2) + 11.0 * r2.powi(4)) + 4.0 * r2 * zd * (r1.powi(2) - r2.powi(2))) + 4.0 * q * (q * (3.0 * r1.powi(4) * r2 - 12.0 * r1.powi(2) * r2.powi(3) + 10.0 * r2.powi(5)) - 4.0 * zd * (r1.powi(4) - 3.0 * r1.powi(2) * r2.powi(2) + 2.0 * r2.powi(4)))) - 48.0 * r2.powi(6) * l.powi(2) * (g.powi(2) * (r1.powi(4) - 5.0 * r1.powi(2) * r2.powi(2) + 4.0 * r2.powi(4)) + 4.0 * g * q * r2 * (3.0 * r1.powi(2) - 4.0 * r2.powi(2)) - 4.0 * q.powi(2) * (r1.powi(2) - 4.0 * r2.powi(2))))).sqrt()
}

/// Re-derived form of [`adjoint`].
pub fn adjoint_corrected(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, b, zd) = (d.g, d.q, d.b, d.z_d);
    let l = (r2 / r1).ln();
    ((-PI) / (768.0 * r1.powi(2)) * ((r1.powi(2) - r2.powi(2)) * (192.0 * b.powi(2) * (r1.powi(2) - r2.powi(2)).powi(2) + 96.0 * b * (r1.powi(2) - r2.powi(2)) * (g * (r1.powi(4) - 4.0 * r1.powi(2) * r2.powi(2) + 3.0 * r2.powi(4)) + 3.0 * q * r1.powi(2) * r2 - 5.0 * q * r2.powi(3) - 4.0 * r1.powi(2) * zd + 4.0 * r2.powi(2) * zd) + g.powi(2) * (13.0 * r1.powi(4) - 80.0 * r1.powi(2) * r2.powi(2) + 115.0 * r2.powi(4)) * (r1.powi(2) - r2.powi(2)).powi(2) + 4.0 * g * (r1.powi(2) - r2.powi(2)) * (q * (19.0 * r1.powi(4) * r2 - 92.0 * r1.powi(2) * r2.powi(3) + 97.0 * r2.powi(5)) - 24.0 * zd * (r1.powi(4) - 4.0 * r1.powi(2) * r2.powi(2) + 3.0 * r2.powi(4))) + 8.0 * (q.powi(2) * (14.0 * r1.powi(4) * r2.powi(2) - 49.0 * r1.powi(2) * r2.powi(4) + 41.0 * r2.powi(6)) - 12.0 * q * r2 * zd * (3.0 * r1.powi(4) - 8.0 * r1.powi(2) * r2.powi(2) + 5.0 * r2.powi(4)) + 24.0 * zd.powi(2) * (r1.powi(2) - r2.powi(2)).powi(2))) + 24.0 * r2.powi(3) * l * (16.0 * b * (r1.powi(2) - r2.powi(2)) * (g * r2 * (r2.powi(2) - r1.powi(2)) + q * (r1.powi(2) - 2.0 * r2.powi(2))) + g.powi(2) * r2 * (12.0 * r2.powi(2) - 5.0 * r1.powi(2)) * (r1.powi(2) - r2.powi(2)).powi(2) + 4.0 * g * (r1.powi(2) - r2.powi(2)) * (q * (r1.powi(4) - 9.0 * r1.powi(2) * r2.powi(2) + 11.0 * r2.powi(4)) + 4.0 * r2 * zd * (r1.powi(2) - r2.powi(2))) + 4.0 * q * (q * (3.0 * r1.powi(4) * r2 - 12.0 * r1.powi(2) * r2.powi(3) + 10.0 * r2.powi(5)) - 4.0 * zd * (r1.powi(4) - 3.0 * r1.powi(2) * r2.powi(2) + 2.0 * r2.powi(4)))) - 48.0 * r2.powi(6) * l.powi(2) * (g.powi(2) * (r1.powi(4) - 5.0 * r1.powi(2) * r2.powi(2) + 4.0 * r2.powi(4)) + 4.0 * g * q * r2 * (3.0 * r1.powi(2) - 4.0 * r2.powi(2)) - 4.0 * q.powi(2) * (r1.powi(2) - 4.0 * r2.powi(2))))).sqrt()
}

/// `lim α|g_α,op − g_op|` for the distributed control.
pub fn ctrl_g(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let l = (r2 / r1).ln();
    let w_g2 = r1 * ((r1.powi(2) - r2.powi(2)) * (96.0 * m1 + 2.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 17.0 * r2.powi(4)) + (36.0 * r2.powi(6) - 24.0 * r1.powi(2) * r2.powi(4)) * l - 24.0 * r2.powi(6) * l.powi(2)).powi(2);
    12.0 / w_g2 * (4.0 * r2.powi(3) * (r2.powi(2) - r1.powi(2)) * l * (36.0 * r2.powi(3) * (b - zd) * (r1.powi(2) - r2.powi(2)) - 96.0 * m1 * q * (r1.powi(2) - 2.0 * r2.powi(2)) + q * (4.0 * r1.powi(6) - 13.0 * r1.powi(4) * r2.powi(2) + 14.0 * r1.powi(2) * r2.powi(4) + 7.0 * r2.powi(6))) - (r1.powi(2) - r2.powi(2)).powi(2) * (4.0 * b * (r1.powi(2) - r2.powi(2)) * (-96.0 * m1 + r1.powi(4) - 5.0 * r1.powi(2) * r2.powi(2) + 10.0 * r2.powi(4)) - 96.0 * m1 * (3.0 * q * r1.powi(2) * r2 - 5.0 * q * r2.powi(3) - 4.0 * r1.powi(2) * zd + 4.0 * r2.powi(2) * zd) + 3.0 * q * r1.powi(6) * r2 - 14.0 * q * r1.powi(4) * r2.powi(3) + 19.0 * q * r1.powi(2) * r2.powi(5) + 4.0 * q * r2.powi(7) - 4.0 * r1.powi(6) * zd + 24.0 * r1.powi(4) * r2.powi(2) * zd - 60.0 * r1.powi(2) * r2.powi(4) * zd + 40.0 * r2.powi(6) * zd) - 24.0 * r2.powi(5) * l.powi(2) * (4.0 * r2 * (b - zd) * (r1.powi(4) - r2.powi(4)) + q * (2.0 * r1.powi(6) - 7.0 * r1.powi(4) * r2.powi(2) + 6.0 * r1.powi(2) * r2.powi(4) + r2.powi(6))) + 96.0 * q * r1.powi(2) * r2.powi(9) * l.powi(3)).abs()
}

/// `lim α|q_α,op − q_op|` for the flux control.
pub fn ctrl_q(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    let l = (r2 / r1).ln();
    let w_q2 = 8.0 * r1 * (4.0 * m2 - r1.powi(2) * r2 + 2.0 * r2.powi(3) * l.powi(2) - 2.0 * r2.powi(3) * l + r2.powi(3)).powi(2);
    ((r2.powi(2) - r1.powi(2)) * (g * (-24.0 * m2 * r1.powi(2) + 3.0 * r1.powi(4) * r2 + 40.0 * m2 * r2.powi(2) - 4.0 * r1.powi(2) * r2.powi(3) + r2.powi(5)) - 64.0 * m2 * (b - zd)) + 2.0 * r2.powi(2) * (g * (-3.0 * r1.powi(4) * r2 + 2.0 * r1.powi(2) * r2.powi(3) + r2.powi(5) + 16.0 * m2 * (r1.powi(2) - 2.0 * r2.powi(2))) + 16.0 * r2 * (r1.powi(2) - r2.powi(2)) * (b - zd)) * l - 4.0 * r2.powi(3) * (g * (-3.0 * r1.powi(4) + 4.0 * r1.powi(2) * r2.powi(2) + r2.powi(4)) - 8.0 * (b - zd) * (r1.powi(2) + r2.powi(2))) * l.powi(2) + 16.0 * g * r1.powi(2) * r2.powi(5) * l.powi(3)).abs() / w_q2
}

/// `α|b_α,op − b_op|`, which does not depend on α.
pub fn ctrl_b(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q) = (d.g, d.q);
    let [_, _, m3, _, _] = d.m;
    ((r1.powi(2) - r2.powi(2)) * (g * (r1.powi(2) - r2.powi(2)) + 2.0 * q * r2) / (2.0 * r1 * (-2.0 * m3 * r1 + r1.powi(2) - r2.powi(2)))).abs()
}

/// Source component of `lim α|(g,q)_α,op − (g,q)_op|`.
pub fn ctrl_gq_g(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let l = (r2 / r1).ln();
    let w_p2 = r1 * ((-16.0 * r2.powi(3) * l.powi(2)) * ((-192.0 * m4) * (r1.powi(2) - r2.powi(2)) + 96.0 * m5 * r2.powi(3) - 4.0 * r1.powi(6) + r2.powi(6)) - 8.0 * r2.powi(3) * l * (384.0 * m4 * (r1.powi(2) - r2.powi(2)) + 6.0 * r1.powi(2) * (32.0 * m5 * r2 + r2.powi(4)) - 288.0 * m5 * r2.powi(3) - 10.0 * r1.powi(6) + 9.0 * r1.powi(4) * r2.powi(2) - 5.0 * r2.powi(6)) + (r1.powi(2) - r2.powi(2)) * (1536.0 * m4 * (4.0 * m5 - r1.powi(2) * r2 + r2.powi(3)) + 64.0 * m5 * (2.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 17.0 * r2.powi(4)) - 5.0 * r1.powi(6) * r2 + 51.0 * r1.powi(4) * r2.powi(3) - 75.0 * r1.powi(2) * r2.powi(5) + 29.0 * r2.powi(7))).powi(2);
    96.0 * (b - zd) / w_p2 * ((-4.0 * r2.powi(3)) * (r2.powi(2) - r1.powi(2)).powi(2) * l * (768.0 * m4 * (8.0 * m5 * (r1.powi(2) + 6.0 * r2.powi(2)) - 3.0 * r1.powi(4) * r2 + 3.0 * r2.powi(5)) + 18432.0 * m5.powi(2) * r2.powi(3) + 64.0 * m5 * (8.0 * r1.powi(6) - 49.0 * r1.powi(4) * r2.powi(2) - 16.0 * r1.powi(2) * r2.powi(4) + 21.0 * r2.powi(6)) - 3.0 * (3.0 * r1.powi(8) * r2 - 65.0 * r1.powi(6) * r2.powi(3) + 49.0 * r1.powi(4) * r2.powi(5) + 17.0 * r1.powi(2) * r2.powi(7) - 4.0 * r2.powi(9))) - (r1.powi(2) - r2.powi(2)).powi(3) * ((-3072.0 * m4) * (64.0 * m5.powi(2) - 14.0 * m5 * r1.powi(2) * r2 - 6.0 * m5 * r2.powi(3) + r1.powi(4) * r2.powi(2) - r2.powi(6)) + 2048.0 * m5.powi(2) * (r1.powi(4) - 5.0 * r1.powi(2) * r2.powi(2) + 10.0 * r2.powi(4)) - 32.0 * m5 * (5.0 * r1.powi(6) * r2 - 25.0 * r1.powi(4) * r2.powi(3) + 119.0 * r1.powi(2) * r2.powi(5) - 75.0 * r2.powi(7)) + r2.powi(2) * (5.0 * r1.powi(8) - 10.0 * r1.powi(6) * r2.powi(2) + 156.0 * r1.powi(4) * r2.powi(4) - 182.0 * r1.powi(2) * r2.powi(6) + 31.0 * r2.powi(8))) + 16.0 * r2.powi(3) * (r1.powi(2) - r2.powi(2)) * l.powi(2) * (192.0 * m4 * (32.0 * m5 * (2.0 * r1.powi(4) - 2.0 * r1.powi(2) * r2.powi(2) - r2.powi(4)) - r2 * (r1.powi(2) - r2.powi(2)).powi(2) * (7.0 * r1.powi(2) + r2.powi(2))) - 3072.0 * m5.powi(2) * r2.powi(3) * (r1.powi(2) + r2.powi(2)) - 32.0 * m5 * (4.0 * r1.powi(8) - 12.0 * r1.powi(6) * r2.powi(2) - 53.0 * r1.powi(4) * r2.powi(4) + 3.0 * r1.powi(2) * r2.powi(6) + 4.0 * r2.powi(8)) + 5.0 * r1.powi(10) * r2 - 81.0 * r1.powi(8) * r2.powi(3) + 25.0 * r1.powi(6) * r2.powi(5) + 46.0 * r1.powi(4) * r2.powi(7) + 6.0 * r1.powi(2) * r2.powi(9) - r2.powi(11)) - 256.0 * r1.powi(4) * r2.powi(6) * l.powi(4) * ((-192.0 * m4) * (r1.powi(2) - r2.powi(2)) + 96.0 * m5 * r2.powi(3) + 2.0 * r1.powi(6) + r2.powi(6)) - 64.0 * r1.powi(2) * r2.powi(6) * l.powi(3) * (192.0 * m4 * (r1.powi(4) - r2.powi(4)) - r1.powi(2) * (288.0 * m5 * r2.powi(3) + 7.0 * r2.powi(6)) - r2.powi(5) * (96.0 * m5 + r2.powi(3)) + 16.0 * r1.powi(8) - 8.0 * r1.powi(6) * r2.powi(2))).abs()
}

/// Flux component of the simultaneous control limit.
pub fn ctrl_gq_q(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let l = (r2 / r1).ln();
    let w_p2 = r1 * ((-16.0 * r2.powi(3) * l.powi(2)) * ((-192.0 * m4) * (r1.powi(2) - r2.powi(2)) + 96.0 * m5 * r2.powi(3) - 4.0 * r1.powi(6) + r2.powi(6)) - 8.0 * r2.powi(3) * l * (384.0 * m4 * (r1.powi(2) - r2.powi(2)) + 6.0 * r1.powi(2) * (32.0 * m5 * r2 + r2.powi(4)) - 288.0 * m5 * r2.powi(3) - 10.0 * r1.powi(6) + 9.0 * r1.powi(4) * r2.powi(2) - 5.0 * r2.powi(6)) + (r1.powi(2) - r2.powi(2)) * (1536.0 * m4 * (4.0 * m5 - r1.powi(2) * r2 + r2.powi(3)) + 64.0 * m5 * (2.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 17.0 * r2.powi(4)) - 5.0 * r1.powi(6) * r2 + 51.0 * r1.powi(4) * r2.powi(3) - 75.0 * r1.powi(2) * r2.powi(5) + 29.0 * r2.powi(7))).powi(2);
    64.0 * (b - zd) / w_p2 * (2.0 * (r1.powi(2) - r2.powi(2)).powi(3) * (147456.0 * m4.powi(2) * m5 - 24.0 * m4 * (64.0 * m5 * (5.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 2.0 * r2.powi(4)) - 3.0 * (9.0 * r1.powi(6) * r2 - 31.0 * r1.powi(4) * r2.powi(3) + 7.0 * r1.powi(2) * r2.powi(5) + 15.0 * r2.powi(7))) - (r1.powi(2) - r2.powi(2)) * (8.0 * m5 * (r1.powi(6) - 15.0 * r1.powi(4) * r2.powi(2) + 3.0 * r1.powi(2) * r2.powi(4) + 83.0 * r2.powi(6)) + 6.0 * r1.powi(6) * r2.powi(3) - 3.0 * r1.powi(4) * r2.powi(5) - 48.0 * r1.powi(2) * r2.powi(7) + 9.0 * r2.powi(9))) + r2.powi(2) * (r1.powi(2) - r2.powi(2)).powi(2) * l * (147456.0 * m4.powi(2) * r2 * (r1.powi(2) - r2.powi(2)) - 384.0 * m4 * (r1.powi(2) - r2.powi(2)) * (48.0 * m5 * (3.0 * r1.powi(2) - 4.0 * r2.powi(2)) - 4.0 * r1.powi(4) * r2 + 35.0 * r1.powi(2) * r2.powi(3) + 11.0 * r2.powi(5)) + r2 * (4.0 * r1.powi(6) * (672.0 * m5 * r2 + 151.0 * r2.powi(4)) - 2.0 * r1.powi(4) * (3744.0 * m5 * r2.powi(3) + 209.0 * r2.powi(6)) + 26.0 * r2.powi(7) * (96.0 * m5 + r2.powi(3)) - 23.0 * r1.powi(10) - 56.0 * r1.powi(8) * r2.powi(2) - 133.0 * r1.powi(2) * r2.powi(8))) - 4.0 * r2.powi(3) * (r1.powi(2) - r2.powi(2)) * l.powi(2) * ((-36864.0 * m4.powi(2)) * (r1.powi(4) - r2.powi(4)) + 192.0 * m4 * (6.0 * r1.powi(4) * (16.0 * m5 * r2 + 3.0 * r2.powi(4)) - r1.powi(2) * (96.0 * m5 * r2.powi(3) + 13.0 * r2.powi(6)) + 96.0 * m5 * r2.powi(5) + 10.0 * r1.powi(8) - 14.0 * r1.powi(6) * r2.powi(2) - r2.powi(8)) - r1.powi(8) * (192.0 * m5 * r2 + 209.0 * r2.powi(4)) - 9.0 * r1.powi(6) * (128.0 * m5 * r2.powi(3) - 3.0 * r2.powi(6)) + r1.powi(4) * (3840.0 * m5 * r2.powi(5) + 137.0 * r2.powi(8)) - 2.0 * r2.powi(9) * (96.0 * m5 + r2.powi(3)) + 2.0 * r1.powi(12) + 25.0 * r1.powi(10) * r2.powi(2) + 20.0 * r1.powi(2) * r2.powi(10)) + 192.0 * r1.powi(4) * r2.powi(7) * l.powi(4) * (192.0 * m4 * (r2.powi(2) - r1.powi(2)) + 96.0 * m5 * r2.powi(3) + 2.0 * r1.powi(6) + r2.powi(6)) - 48.0 * r1.powi(2) * r2.powi(5) * l.powi(3) * (192.0 * m4 * (r1.powi(2) - r2.powi(2)).powi(2) * (3.0 * r1.powi(2) + r2.powi(2)) + r2.powi(2) * ((-3.0 * r1.powi(4)) * (96.0 * m5 * r2 + r2.powi(4)) + 8.0 * r1.powi(2) * (48.0 * m5 * r2.powi(3) + r2.powi(6)) + 96.0 * m5 * r2.powi(5) - 14.0 * r1.powi(8) + 8.0 * r1.powi(6) * r2.powi(2) + r2.powi(8)))).abs()
}

/// `lim α|J1α − J1|` at the respective optima.
pub fn cost_j1(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let l = (r2 / r1).ln();
    let w_j12 = 16.0 * r1 * ((r1.powi(2) - r2.powi(2)) * (96.0 * m1 + 2.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 17.0 * r2.powi(4)) + (36.0 * r2.powi(6) - 24.0 * r1.powi(2) * r2.powi(4)) * l - 24.0 * r2.powi(6) * l.powi(2)).powi(2);
    PI / w_j12 * ((12.0 * b * r1.powi(6) - 60.0 * b * r1.powi(4) * r2.powi(2) + 84.0 * b * r1.powi(2) * r2.powi(4) - 48.0 * b * r1.powi(2) * r2.powi(4) * l + 48.0 * b * r2.powi(6) * l - 36.0 * b * r2.powi(6) - 192.0 * m1 * q * r1.powi(2) * r2 + 192.0 * m1 * q * r2.powi(3) + 5.0 * q * r1.powi(6) * r2 - 15.0 * q * r1.powi(4) * r2.powi(3) + 24.0 * q * r1.powi(4) * r2.powi(3) * l + 3.0 * q * r1.powi(2) * r2.powi(5) + 48.0 * q * r1.powi(2) * r2.powi(5) * l.powi(2) - 36.0 * q * r1.powi(2) * r2.powi(5) * l - 12.0 * q * r2.powi(7) * l + 7.0 * q * r2.powi(7) - 12.0 * r1.powi(6) * zd + 60.0 * r1.powi(4) * r2.powi(2) * zd - 84.0 * r1.powi(2) * r2.powi(4) * zd + 48.0 * r1.powi(2) * r2.powi(4) * zd * l - 48.0 * r2.powi(6) * zd * l + 36.0 * r2.powi(6) * zd) * (-768.0 * m1 * q * r2.powi(5) * l - 1536.0 * b * m1 * r1.powi(2) * r2.powi(2) + 768.0 * b * m1 * r2.powi(4) + 4.0 * b * r1.powi(8) - 40.0 * b * r1.powi(6) * r2.powi(2) + 96.0 * b * r1.powi(4) * r2.powi(4) - 96.0 * b * r1.powi(4) * r2.powi(4) * l - 88.0 * b * r1.powi(2) * r2.powi(6) - 192.0 * b * r1.powi(2) * r2.powi(6) * l.powi(2) + 96.0 * b * r1.powi(2) * r2.powi(6) * l + 28.0 * b * r2.powi(8) + 384.0 * m1 * q * r1.powi(4) * r2 - 768.0 * m1 * q * r1.powi(2) * r2.powi(3) + 768.0 * m1 * q * r1.powi(2) * r2.powi(3) * l * 768.0 * b * m1 * r1.powi(4) + 384.0 * m1 * q * r2.powi(5) - 768.0 * m1 * r1.powi(4) * zd + 1536.0 * m1 * r1.powi(2) * r2.powi(2) * zd - 768.0 * m1 * r2.powi(4) * zd - q * r1.powi(8) * r2 + 4.0 * q * r1.powi(6) * r2.powi(3) - 8.0 * q * r1.powi(6) * r2.powi(3) * l - 18.0 * q * r1.powi(4) * r2.powi(5) - 48.0 * q * r1.powi(4) * r2.powi(5) * l.powi(2) - 24.0 * q * r1.powi(4) * r2.powi(5) * l + 28.0 * q * r1.powi(2) * r2.powi(7) + 24.0 * q * r1.powi(2) * r2.powi(7) * l + 8.0 * q * r2.powi(9) * l - 13.0 * q * r2.powi(9) - 4.0 * r1.powi(8) * zd + 40.0 * r1.powi(6) * r2.powi(2) * zd - 96.0 * r1.powi(4) * r2.powi(4) * zd + 96.0 * r1.powi(4) * r2.powi(4) * zd * l + 88.0 * r1.powi(2) * r2.powi(6) * zd + 192.0 * r1.powi(2) * r2.powi(6) * zd * l.powi(2) - 96.0 * r1.powi(2) * r2.powi(6) * zd * l - 28.0 * r2.powi(8) * zd)).abs()
}

/// Re-derived form of [`cost_j1`].
pub fn cost_j1_corrected(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let l = (r2 / r1).ln();
    let w_j12 = 16.0 * r1 * ((r1.powi(2) - r2.powi(2)) * (96.0 * m1 + 2.0 * r1.powi(4) - 13.0 * r1.powi(2) * r2.powi(2) + 17.0 * r2.powi(4)) + (36.0 * r2.powi(6) - 24.0 * r1.powi(2) * r2.powi(4)) * l - 24.0 * r2.powi(6) * l.powi(2)).powi(2);
    PI / w_j12 * ((12.0 * b * r1.powi(6) - 60.0 * b * r1.powi(4) * r2.powi(2) + 84.0 * b * r1.powi(2) * r2.powi(4) - 48.0 * b * r1.powi(2) * r2.powi(4) * l + 48.0 * b * r2.powi(6) * l - 36.0 * b * r2.powi(6) - 192.0 * m1 * q * r1.powi(2) * r2 + 192.0 * m1 * q * r2.powi(3) + 5.0 * q * r1.powi(6) * r2 - 15.0 * q * r1.powi(4) * r2.powi(3) + 24.0 * q * r1.powi(4) * r2.powi(3) * l + 3.0 * q * r1.powi(2) * r2.powi(5) + 48.0 * q * r1.powi(2) * r2.powi(5) * l.powi(2) - 36.0 * q * r1.powi(2) * r2.powi(5) * l - 12.0 * q * r2.powi(7) * l + 7.0 * q * r2.powi(7) - 12.0 * r1.powi(6) * zd + 60.0 * r1.powi(4) * r2.powi(2) * zd - 84.0 * r1.powi(2) * r2.powi(4) * zd + 48.0 * r1.powi(2) * r2.powi(4) * zd * l - 48.0 * r2.powi(6) * zd * l + 36.0 * r2.powi(6) * zd) * (-768.0 * m1 * q * r2.powi(5) * l - 1536.0 * b * m1 * r1.powi(2) * r2.powi(2) + 768.0 * b * m1 * r2.powi(4) + 4.0 * b * r1.powi(8) - 40.0 * b * r1.powi(6) * r2.powi(2) + 96.0 * b * r1.powi(4) * r2.powi(4) - 96.0 * b * r1.powi(4) * r2.powi(4) * l - 88.0 * b * r1.powi(2) * r2.powi(6) - 192.0 * b * r1.powi(2) * r2.powi(6) * l.powi(2) + 96.0 * b * r1.powi(2) * r2.powi(6) * l + 28.0 * b * r2.powi(8) + 384.0 * m1 * q * r1.powi(4) * r2 - 768.0 * m1 * q * r1.powi(2) * r2.powi(3) + 768.0 * m1 * q * r1.powi(2) * r2.powi(3) * l + 768.0 * b * m1 * r1.powi(4) + 384.0 * m1 * q * r2.powi(5) - 768.0 * m1 * r1.powi(4) * zd + 1536.0 * m1 * r1.powi(2) * r2.powi(2) * zd - 768.0 * m1 * r2.powi(4) * zd - q * r1.powi(8) * r2 + 4.0 * q * r1.powi(6) * r2.powi(3) - 8.0 * q * r1.powi(6) * r2.powi(3) * l - 18.0 * q * r1.powi(4) * r2.powi(5) - 48.0 * q * r1.powi(4) * r2.powi(5) * l.powi(2) - 24.0 * q * r1.powi(4) * r2.powi(5) * l + 28.0 * q * r1.powi(2) * r2.powi(7) + 24.0 * q * r1.powi(2) * r2.powi(7) * l + 8.0 * q * r2.powi(9) * l - 13.0 * q * r2.powi(9) - 4.0 * r1.powi(8) * zd + 40.0 * r1.powi(6) * r2.powi(2) * zd - 96.0 * r1.powi(4) * r2.powi(4) * zd + 96.0 * r1.powi(4) * r2.powi(4) * zd * l + 88.0 * r1.powi(2) * r2.powi(6) * zd + 192.0 * r1.powi(2) * r2.powi(6) * zd * l.powi(2) - 96.0 * r1.powi(2) * r2.powi(6) * zd * l - 28.0 * r2.powi(8) * zd)).abs()
}

/// `lim α|J2α − J2|` at the respective optima.
pub fn cost_j2(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    let l = (r2 / r1).ln();
    let w_j22 = 512.0 * r1 * (4.0 * m2 - r1.powi(2) * r2 + 2.0 * r2.powi(3) * l.powi(2) - 2.0 * r2.powi(3) * l + r2.powi(3)).powi(2);
    PI / w_j22 * ((16.0 * b * r1.powi(2) * r2 + 32.0 * b * r2.powi(3) * l - 16.0 * b * r2.powi(3) + 32.0 * g * m2 * r1.powi(2) - 32.0 * g * m2 * r2.powi(2) - 5.0 * g * r1.powi(4) * r2 + 4.0 * g * r1.powi(2) * r2.powi(3) + 16.0 * g * r1.powi(2) * r2.powi(3) * l.powi(2) - 8.0 * g * r1.powi(2) * r2.powi(3) * l - 4.0 * g * r2.powi(5) * l + g * r2.powi(5) - 16.0 * r1.powi(2) * r2 * zd - 32.0 * r2.powi(3) * zd * l + 16.0 * r2.powi(3) * zd) * (128.0 * b * m2 * r1.powi(2) - 128.0 * b * m2 * r2.powi(2) - 16.0 * b * r1.powi(4) * r2 + 32.0 * b * r1.powi(2) * r2.powi(3) + 64.0 * b * r1.powi(2) * r2.powi(3) * l.powi(2) - 16.0 * b * r2.powi(5) + 16.0 * g * m2 * r1.powi(4) - 64.0 * g * m2 * r1.powi(2) * r2.powi(2) - 64.0 * g * m2 * r2.powi(4) * l + 48.0 * g * m2 * r2.powi(4) - g * r1.powi(6) * r2 + 5.0 * g * r1.powi(4) * r2.powi(3) + 8.0 * g * r1.powi(4) * r2.powi(3) * l.powi(2) + 6.0 * g * r1.powi(4) * r2.powi(3) * l - 7.0 * g * r1.powi(2) * r2.powi(5) - 4.0 * g * r1.powi(2) * r2.powi(5) * l - 2.0 * g * r2.powi(7) * l + 3.0 * g * r2.powi(7) - 128.0 * m2 * r1.powi(2) * zd + 128.0 * m2 * r2.powi(2) * zd + 16.0 * r1.powi(4) * r2 * zd - 32.0 * r1.powi(2) * r2.powi(3) * zd - 64.0 * r1.powi(2) * r2.powi(3) * zd * l.powi(2) + 16.0 * r2.powi(5) * zd)).abs()
}

/// `lim α|J3α − J3|` at the respective optima.
pub fn cost_j3(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, zd) = (d.g, d.q, d.z_d);
    let [_, _, m3, _, _] = d.m;
    let l = (r2 / r1).ln();
    PI * (m3 * (g * (r1.powi(2) - r2.powi(2)) + 2.0 * q * r2)).abs() / (8.0 * r1 * (-2.0 * m3 * r1 + r1.powi(2) - r2.powi(2))).abs() * (g * r1.powi(3) * (r1.powi(2) - r2.powi(2)) + 4.0 * q * r1 * r2 * (r1.powi(2) - r2.powi(2)) - 3.0 * g * r1 * r2.powi(2) * (r1.powi(2) - r2.powi(2)) - 8.0 * r1 * (r1.powi(2) - r2.powi(2)) * zd - 4.0 * r1 * r2.powi(3) * (-2.0 * q + g * r2) * l).abs()
}

/// `lim α|J4α − J4|` at the respective optima.
pub fn cost_j4(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let l = (r2 / r1).ln();
    let w_j42 = r1 * (6144.0 * m4 * m5 * r1.powi(2) - 6144.0 * m4 * m5 * r2.powi(2) - 1536.0 * m4 * r1.powi(4) * r2 + 3072.0 * m4 * r1.powi(2) * r2.powi(3) + 3072.0 * m4 * r1.powi(2) * r2.powi(3) * l.powi(2) - 3072.0 * m4 * r1.powi(2) * r2.powi(3) * l - 3072.0 * m4 * r2.powi(5) * l.powi(2) + 3072.0 * m4 * r2.powi(5) * l - 1536.0 * m4 * r2.powi(5) + 128.0 * m5 * r1.powi(6) - 960.0 * m5 * r1.powi(4) * r2.powi(2) + 1920.0 * m5 * r1.powi(2) * r2.powi(4) - 1536.0 * m5 * r1.powi(2) * r2.powi(4) * l - 1536.0 * m5 * r2.powi(6) * l.powi(2) + 2304.0 * m5 * r2.powi(6) * l - 1088.0 * m5 * r2.powi(6) - 5.0 * r1.powi(8) * r2 + 56.0 * r1.powi(6) * r2.powi(3) + 64.0 * r1.powi(6) * r2.powi(3) * l.powi(2) + 80.0 * r1.powi(6) * r2.powi(3) * l - 126.0 * r1.powi(4) * r2.powi(5) - 72.0 * r1.powi(4) * r2.powi(5) * l + 104.0 * r1.powi(2) * r2.powi(7) - 48.0 * r1.powi(2) * r2.powi(7) * l - 16.0 * r2.powi(9) * l.powi(2) + 40.0 * r2.powi(9) * l - 29.0 * r2.powi(9)).powi(2);
    4.0 * PI * (b - zd).powi(2) / w_j42 * ((-384.0 * m4 * r1.powi(4) * r2 + 768.0 * m4 * r1.powi(2) * r2.powi(3) - 768.0 * m4 * r1.powi(2) * r2.powi(3) * l + 768.0 * m4 * r2.powi(5) * l - 384.0 * m4 * r2.powi(5) + 96.0 * m5 * r1.powi(6) - 480.0 * m5 * r1.powi(4) * r2.powi(2) + 672.0 * m5 * r1.powi(2) * r2.powi(4) - 384.0 * m5 * r1.powi(2) * r2.powi(4) * l + 384.0 * m5 * r2.powi(6) * l - 288.0 * m5 * r2.powi(6) - 5.0 * r1.powi(8) * r2 + 32.0 * r1.powi(6) * r2.powi(3) + 48.0 * r1.powi(6) * r2.powi(3) * l.powi(2) + 44.0 * r1.powi(6) * r2.powi(3) * l - 54.0 * r1.powi(4) * r2.powi(5) - 36.0 * r1.powi(4) * r2.powi(5) * l + 32.0 * r1.powi(2) * r2.powi(7) - 12.0 * r1.powi(2) * r2.powi(7) * l + 4.0 * r2.powi(9) * l - 5.0 * r2.powi(9)) * (6144.0 * m4 * m5 * r1.powi(4) - 12288.0 * m4 * m5 * r1.powi(2) * r2.powi(2) + 6144.0 * m4 * m5 * r2.powi(4) - 768.0 * m4 * r1.powi(6) * r2 + 2304.0 * m4 * r1.powi(4) * r2.powi(3) + 3072.0 * m4 * r1.powi(4) * r2.powi(3) * l.powi(2) - 2304.0 * m4 * r1.powi(2) * r2.powi(5) - 3072.0 * m4 * r1.powi(2) * r2.powi(5) * l.powi(2) + 768.0 * m4 * r2.powi(7) + 32.0 * m5 * r1.powi(8) - 320.0 * m5 * r1.powi(6) * r2.powi(2) + 768.0 * m5 * r1.powi(4) * r2.powi(4) - 768.0 * m5 * r1.powi(4) * r2.powi(4) * l - 704.0 * m5 * r1.powi(2) * r2.powi(6) - 1536.0 * m5 * r1.powi(2) * r2.powi(6) * l.powi(2) + 768.0 * m5 * r1.powi(2) * r2.powi(6) * l + 224.0 * m5 * r2.powi(8) - r1.powi(10) * r2 + 17.0 * r1.powi(8) * r2.powi(3) + 16.0 * r1.powi(8) * r2.powi(3) * l.powi(2) + 24.0 * r1.powi(8) * r2.powi(3) * l - 46.0 * r1.powi(6) * r2.powi(5) - 24.0 * r1.powi(6) * r2.powi(5) * l + 46.0 * r1.powi(4) * r2.powi(7) - 24.0 * r1.powi(4) * r2.powi(7) * l - 17.0 * r1.powi(2) * r2.powi(9) - 16.0 * r1.powi(2) * r2.powi(9) * l.powi(2) + 24.0 * r1.powi(2) * r2.powi(9) * l + r2.powi(11))).abs()
}

/// `α‖u_α − u‖`, which does not depend on α.
pub fn state_gap(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    PI.sqrt() * (r2.powi(2) - r1.powi(2)).sqrt() * (2.0 * d.q * r2 - d.g * (r2.powi(2) - r1.powi(2))).abs() / (2.0 * r1)
}
