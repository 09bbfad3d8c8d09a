//! Printed large-α limits on the spherical shell, transcribed verbatim.
//!
//! `l` is `ln(r2/r1)` and only appears in the adjoint limit.

use std::f64::consts::PI;

use crate::problem::ProblemData;

/// `lim α‖p_α − p‖` in the L² norm of the domain.
pub fn adjoint(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, b, zd) = (d.g, d.q, d.b, d.z_d);
    (PI * (r2 - r1).powi(3) / (42525.0 * r1.powi(6)) * (6300.0 * b.powi(2) * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(3) + 420.0 * b * r1 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (4.0 * g * (r1.powi(5) + 4.0 * r1.powi(4) * r2 + 10.0 * r1.powi(3) * r2.powi(2) + 14.0 * r1.powi(2) * r2.powi(3) + 11.0 * r1 * r2.powi(4) + 5.0 * r2.powi(5)) * (r1 - r2).powi(2) + 3.0 * (q * r2.powi(2) * (7.0 * r1.powi(4) + 14.0 * r1.powi(3) * r2 + 6.0 * r1.powi(2) * r2.powi(2) - 7.0 * r1 * r2.powi(3) - 20.0 * r2.powi(4)) - 10.0 * r1 * zd * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2))) + 4.0 * g.powi(2) * (31.0 * r1.powi(8) + 217.0 * r1.powi(7) * r2 + 868.0 * r1.powi(6) * r2.powi(2) + 2248.0 * r1.powi(5) * r2.powi(3) + 4018.0 * r1.powi(4) * r2.powi(4) + 5047.0 * r1.powi(3) * r2.powi(5) + 4336.0 * r1.powi(2) * r2.powi(6) + 2380.0 * r1 * r2.powi(7) + 700.0 * r2.powi(8)) * (r1 - r2).powi(4) - 24.0 * g * (r1 - r2).powi(2) * (q * r2.powi(2) * (-52.0 * r1.powi(7) - 260.0 * r1.powi(6) * r2 - 675.0 * r1.powi(5) * r2.powi(2) - 970.0 * r1.powi(4) * r2.powi(3) - 440.0 * r1.powi(3) * r2.powi(4) + 612.0 * r1.powi(2) * r2.powi(5) + 1085.0 * r1 * r2.powi(6) + 700.0 * r2.powi(7)) + 70.0 * r1 * zd * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) * (r1.powi(3) + 3.0 * r1.powi(2) * r2 + 6.0 * r1 * r2.powi(2) + 5.0 * r2.powi(3))) + 45.0 * (q.powi(2) * r2.powi(4) * (r1 - r2).powi(2) * (71.0 * r1.powi(4) + 355.0 * r1.powi(3) * r2 + 771.0 * r1.powi(2) * r2.powi(2) + 952.0 * r1 * r2.powi(3) + 560.0 * r2.powi(4)) - 28.0 * q * r1 * r2.powi(2) * zd * (7.0 * r1.powi(6) + 21.0 * r1.powi(5) * r2 + 27.0 * r1.powi(4) * r2.powi(2) + 13.0 * r1.powi(3) * r2.powi(3) - 21.0 * r1.powi(2) * r2.powi(4) - 27.0 * r1 * r2.powi(5) - 20.0 * r2.powi(6)) + 140.0 * r1.powi(2) * zd.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(3)))).sqrt()
}

/// `lim α|g_α,op − g_op|` for the distributed control.
pub fn ctrl_g(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let w_g3 = 4.0 * (315.0 * m1 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)) + (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) * (r1 - r2).powi(4)).powi(2);
    21.0 * (r2 - r1) / w_g3 * (4.0 * (b - zd) * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (1575.0 * m1 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) - (r1 - r2).powi(4) * (4.0 * r1.powi(6) + 24.0 * r1.powi(5) * r2 + 84.0 * r1.powi(4) * r2.powi(2) + 199.0 * r1.powi(3) * r2.powi(3) + 354.0 * r1.powi(2) * r2.powi(4) + 420.0 * r1 * r2.powi(5) + 175.0 * r2.powi(6))) - 630.0 * m1 * q * r2.powi(2) * r1 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (-7.0 * r1.powi(4) - 14.0 * r1.powi(3) * r2 - 6.0 * r1.powi(2) * r2.powi(2) + 7.0 * r1 * r2.powi(3) + 20.0 * r2.powi(4)) - 3.0 * q * r2.powi(2) * (r1 - r2).powi(4) * (7.0 * r1.powi(7) + 49.0 * r1.powi(6) * r2 + 146.0 * r1.powi(5) * r2.powi(2) + 198.0 * r1.powi(4) * r2.powi(3) + 105.0 * r1.powi(3) * r2.powi(4) - 170.0 * r1.powi(2) * r2.powi(5) - 265.0 * r1 * r2.powi(6) - 70.0 * r2.powi(7))).abs()
}

/// `lim α|q_α,op − q_op|` for the flux control.
pub fn ctrl_q(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    let w_q3 = 40.0 * (r2.powi(2) * (r1 - r2).powi(3) - 3.0 * m2 * r1.powi(2)).powi(2);
    (r2 - r1) / w_q3 * (20.0 * (b - zd) * (6.0 * m2 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)) - r2.powi(2) * (r1 - r2).powi(3) * (r1.powi(2) - 2.0 * r1 * r2 - 2.0 * r2.powi(2))) + g * (r1 - r2).powi(2) * (4.0 * m2 * r1 * (7.0 * r1.powi(3) + 21.0 * r1.powi(2) * r2 + 27.0 * r1 * r2.powi(2) + 20.0 * r2.powi(3)) - r2.powi(2) * (r1 - r2).powi(3) * (7.0 * r1.powi(2) + 14.0 * r1 * r2 + 4.0 * r2.powi(2)))).abs()
}

/// `α|b_α,op − b_op|`, which does not depend on α.
pub fn ctrl_b(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q) = (d.g, d.q);
    let [_, _, m3, _, _] = d.m;
    ((r1.powi(3) - r2.powi(3)) * (g * (r1.powi(3) - r2.powi(3)) + 3.0 * q * r2.powi(2)) / (3.0 * r1.powi(2) * (-3.0 * m3 * r1.powi(2) + r1.powi(3) - r2.powi(3)))).abs()
}

/// Source component of `lim α|(g,q)_α,op − (g,q)_op|`.
pub fn ctrl_gq_g(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let w_p3 = (33600.0 * m4 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (3.0 * m5 * r1.powi(2) - r2.powi(2) * (r1 - r2).powi(3)) + (r1 - r2).powi(4) * (320.0 * m5 * (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) - r2.powi(2) * (r1 - r2).powi(3) * (99.0 * r1.powi(2) + 152.0 * r1 * r2 + 64.0 * r2.powi(2)))).powi(2);
    840.0 * (r2 - r1) * (b - zd) / w_p3 * (16800.0 * m4 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (240.0 * m5.powi(2) * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) - 2.0 * m5 * r2.powi(2) * (59.0 * r1.powi(4) + 55.0 * r1.powi(3) * r2 + 27.0 * r1.powi(2) * r2.powi(2) - 56.0 * r1 * r2.powi(3) - 40.0 * r2.powi(4)) * (r1 - r2).powi(3) + r2.powi(4) * (15.0 * r1.powi(2) + 2.0 * r1 * r2 - 2.0 * r2.powi(2)) * (r1 - r2).powi(6)) - (r1 - r2).powi(4) * (2560.0 * m5.powi(2) * (4.0 * r1.powi(8) + 28.0 * r1.powi(7) * r2 + 112.0 * r1.powi(6) * r2.powi(2) + 307.0 * r1.powi(5) * r2.powi(3) + 637.0 * r1.powi(4) * r2.powi(4) + 973.0 * r1.powi(3) * r2.powi(5) + 949.0 * r1.powi(2) * r2.powi(6) + 595.0 * r1 * r2.powi(7) + 175.0 * r2.powi(8)) - 8.0 * m5 * r2.powi(2) * (417.0 * r1.powi(6) + 1610.0 * r1.powi(5) * r2 + 2915.0 * r1.powi(4) * r2.powi(2) + 1490.0 * r1.powi(3) * r2.powi(3) - 575.0 * r1.powi(2) * r2.powi(4) + 3448.0 * r1 * r2.powi(5) + 1720.0 * r2.powi(6)) * (r1 - r2).powi(3) + r2.powi(4) * (297.0 * r1.powi(4) + 525.0 * r1.powi(3) * r2 + 433.0 * r1.powi(2) * r2.powi(2) + 256.0 * r1 * r2.powi(3) + 64.0 * r2.powi(4)) * (r1 - r2).powi(6))).abs()
}

/// Flux component of the simultaneous control limit.
pub fn ctrl_gq_q(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let w_p3 = (33600.0 * m4 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (3.0 * m5 * r1.powi(2) - r2.powi(2) * (r1 - r2).powi(3)) + (r1 - r2).powi(4) * (320.0 * m5 * (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) - r2.powi(2) * (r1 - r2).powi(3) * (99.0 * r1.powi(2) + 152.0 * r1 * r2 + 64.0 * r2.powi(2)))).powi(2);
    24.0 * (r2 - r1) * (b - zd) / w_p3 * (23520000.0 * m4.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) * (6.0 * m5 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)) - r2.powi(2) * (r1 - r2).powi(3) * (r1.powi(2) - 2.0 * r1 * r2 - 2.0 * r2.powi(2))) - 1400.0 * m4 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (r1 - r2).powi(4) * (8.0 * m5 * (281.0 * r1.powi(6) + 1686.0 * r1.powi(5) * r2 + 4431.0 * r1.powi(4) * r2.powi(2) + 6446.0 * r1.powi(3) * r2.powi(3) + 6441.0 * r1.powi(2) * r2.powi(4) + 4200.0 * r1 * r2.powi(5) + 1400.0 * r2.powi(6)) - r2.powi(2) * (r1 - r2).powi(3) * (489.0 * r1.powi(4) + 2153.0 * r1.powi(3) * r2 + 3105.0 * r1.powi(2) * r2.powi(2) + 600.0 * r1 * r2.powi(3) - 152.0 * r2.powi(4))) - (r1 - r2).powi(8) * (320.0 * m5 * (4.0 * r1.powi(8) + 44.0 * r1.powi(7) * r2 + 264.0 * r1.powi(6) * r2.powi(2) + 1049.0 * r1.powi(5) * r2.powi(3) + 2539.0 * r1.powi(4) * r2.powi(4) + 3495.0 * r1.powi(3) * r2.powi(5) + 2055.0 * r1.powi(2) * r2.powi(6) - 315.0 * r1 * r2.powi(7) - 315.0 * r2.powi(8)) - r2.powi(2) * (r1 - r2).powi(3) * (99.0 * r1.powi(6) + 106.0 * r1.powi(5) * r2 - 1675.0 * r1.powi(4) * r2.powi(2) - 3270.0 * r1.powi(3) * r2.powi(3) - 3405.0 * r1.powi(2) * r2.powi(4) - 2304.0 * r1 * r2.powi(5) - 576.0 * r2.powi(6)))).abs()
}

/// `lim α|J1α − J1|` at the respective optima.
pub fn cost_j1(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let w_j13 = 80.0 * (315.0 * m1 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)) + (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) * (r1 - r2).powi(4)).powi(2);
    PI * (r2 - r1) / w_j13 * ((q * (2520.0 * m1 * r1.powi(3) * r2.powi(2) + 33.0 * r1.powi(7) * r2.powi(2) - 2520.0 * m1 * r1.powi(2) * r2.powi(3) + 33.0 * r1.powi(6) * r2.powi(3) - 2520.0 * m1 * r1 * r2.powi(4) - 177.0 * r1.powi(5) * r2.powi(4) - 198.0 * r1.powi(4) * r2.powi(5) + 747.0 * r1.powi(3) * r2.powi(6) - 471.0 * r1.powi(2) * r2.powi(7) - 51.0 * r1 * r2.powi(8) + 84.0 * r2.powi(9)) + (b - zd) * (56.0 * r1.powi(8) + 56.0 * r1.powi(7) * r2 + 56.0 * r1.powi(6) * r2.powi(2) - 280.0 * r1.powi(5) * r2.powi(3) - 280.0 * r1.powi(4) * r2.powi(4) + 224.0 * r1.powi(3) * r2.powi(5) + 224.0 * r1.powi(2) * r2.powi(6) + 224.0 * r1 * r2.powi(7) - 280.0 * r2.powi(8))) * (q * (2100.0 * m1 * r1.powi(4) * r2.powi(2) - 3.0 * r1.powi(8) * r2.powi(2) + 4200.0 * m1 * r1.powi(3) * r2.powi(3) - 6.0 * r1.powi(7) * r2.powi(3) + 21.0 * r1.powi(6) * r2.powi(4) - 2100.0 * m1 * r1 * r2.powi(5) + 63.0 * r1.powi(5) * r2.powi(5) - 4200.0 * m1 * r2.powi(6) - 210.0 * r1.powi(4) * r2.powi(6) + 168.0 * r1.powi(3) * r2.powi(7) + 21.0 * r1.powi(2) * r2.powi(8) - 81.0 * r1 * r2.powi(9) + 27.0 * q * r2.powi(10)) + (b - zd) * (4200.0 * m1 * r1.powi(5) + 8.0 * r1.powi(9) + 8400.0 * m1 * r1.powi(4) * r2 + 16.0 * r1.powi(8) * r2 + 12600.0 * m1 * r1.powi(3) * r2.powi(2) + 24.0 * r1.powi(7) * r2.powi(2) + 8400.0 * m1 * r1.powi(2) * r2.powi(3) - 88.0 * r1.powi(6) * r2.powi(3) + 4200.0 * m1 * r1 * r2.powi(4) - 200.0 * r1.powi(5) * r2.powi(4) + 192.0 * r1.powi(4) * r2.powi(5) + 584.0 * r1.powi(3) * r2.powi(6) - 824.0 * r1.powi(2) * r2.powi(7) + 288.0 * r1 * r2.powi(8)))).abs()
}

/// Re-derived form of [`cost_j1`].
pub fn cost_j1_corrected(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (q, b, zd) = (d.q, d.b, d.z_d);
    let [m1, _, _, _, _] = d.m;
    let w_j13 = 80.0 * (315.0 * m1 * r1.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)) + (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) * (r1 - r2).powi(4)).powi(2);
    PI * (r2 - r1) / w_j13 * ((q * (-2520.0 * m1 * r1.powi(3) * r2.powi(2) + 33.0 * r1.powi(7) * r2.powi(2) - 2520.0 * m1 * r1.powi(2) * r2.powi(3) + 33.0 * r1.powi(6) * r2.powi(3) - 2520.0 * m1 * r1 * r2.powi(4) - 177.0 * r1.powi(5) * r2.powi(4) - 198.0 * r1.powi(4) * r2.powi(5) + 747.0 * r1.powi(3) * r2.powi(6) - 471.0 * r1.powi(2) * r2.powi(7) - 51.0 * r1 * r2.powi(8) + 84.0 * r2.powi(9)) + (b - zd) * (56.0 * r1.powi(8) + 56.0 * r1.powi(7) * r2 + 56.0 * r1.powi(6) * r2.powi(2) - 280.0 * r1.powi(5) * r2.powi(3) - 280.0 * r1.powi(4) * r2.powi(4) + 224.0 * r1.powi(3) * r2.powi(5) + 224.0 * r1.powi(2) * r2.powi(6) + 224.0 * r1 * r2.powi(7) - 280.0 * r2.powi(8))) * (q * (2100.0 * m1 * r1.powi(4) * r2.powi(2) - 3.0 * r1.powi(8) * r2.powi(2) + 4200.0 * m1 * r1.powi(3) * r2.powi(3) - 6.0 * r1.powi(7) * r2.powi(3) + 21.0 * r1.powi(6) * r2.powi(4) - 2100.0 * m1 * r1 * r2.powi(5) + 63.0 * r1.powi(5) * r2.powi(5) - 4200.0 * m1 * r2.powi(6) - 210.0 * r1.powi(4) * r2.powi(6) + 168.0 * r1.powi(3) * r2.powi(7) + 21.0 * r1.powi(2) * r2.powi(8) - 81.0 * r1 * r2.powi(9) + 27.0 * r2.powi(10)) + (b - zd) * (4200.0 * m1 * r1.powi(5) + 8.0 * r1.powi(9) + 8400.0 * m1 * r1.powi(4) * r2 + 16.0 * r1.powi(8) * r2 + 12600.0 * m1 * r1.powi(3) * r2.powi(2) + 24.0 * r1.powi(7) * r2.powi(2) + 8400.0 * m1 * r1.powi(2) * r2.powi(3) - 88.0 * r1.powi(6) * r2.powi(3) + 4200.0 * m1 * r1 * r2.powi(4) - 200.0 * r1.powi(5) * r2.powi(4) + 192.0 * r1.powi(4) * r2.powi(5) + 584.0 * r1.powi(3) * r2.powi(6) - 824.0 * r1.powi(2) * r2.powi(7) + 288.0 * r1 * r2.powi(8)))).abs()
}

/// `lim α|J2α − J2|` at the respective optima.
pub fn cost_j2(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, b, zd) = (d.g, d.b, d.z_d);
    let [_, m2, _, _, _] = d.m;
    let w_j23 = 2400.0 * (r2.powi(2) * (r1 - r2).powi(3) - 3.0 * m2 * r1.powi(2)).powi(2);
    PI / w_j23 * (r2 - r1).powi(2) * ((g * (-40.0 * m2 * r1.powi(3) - 40.0 * m2 * r1.powi(2) * r2 - 40.0 * m2 * r1 * r2.powi(2) + 11.0 * r1.powi(4) * r2.powi(2) - 29.0 * r1.powi(3) * r2.powi(3) + 21.0 * r1.powi(2) * r2.powi(4) + r1 * r2.powi(5) - 4.0 * r2.powi(6)) + (b - zd) * (-20.0 * r1.powi(2) * r2.powi(2) - 20.0 * r1 * r2.powi(3) + 40.0 * r2.powi(4))) * (g * (-16.0 * m2 * r1.powi(5) - 16.0 * m2 * r1.powi(4) * r2 - 16.0 * m2 * r1.powi(3) * r2.powi(2) + 3.0 * r1.powi(6) * r2.powi(2) + 64.0 * m2 * r1.powi(2) * r2.powi(3) - 13.0 * r1.powi(5) * r2.powi(3) + 64.0 * m2 * r1 * r2.powi(4) + 20.0 * r1.powi(4) * r2.powi(4) - 80.0 * m2 * r2.powi(5) - 10.0 * r1.powi(3) * r2.powi(5) - 5.0 * r1.powi(2) * r2.powi(6) + 7.0 * r1 * r2.powi(7) - 2.0 * r2.powi(8)) + (b - zd) * (-240.0 * m2 * r1.powi(3) - 240.0 * m2 * r1.powi(2) * r2 - 240.0 * m2 * r1 * r2.powi(2) + 60.0 * r1.powi(4) * r2.powi(2) - 180.0 * r1.powi(3) * r2.powi(3) + 180.0 * r1.powi(2) * r2.powi(4) - 60.0 * r1 * r2.powi(5)))).abs()
}

/// `lim α|J3α − J3|` at the respective optima.
pub fn cost_j3(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, zd) = (d.g, d.q, d.z_d);
    let [_, _, m3, _, _] = d.m;
    2.0 * PI / (45.0 * r1.powi(2) * (-3.0 * m3 * r1.powi(2) + r1.powi(3) - r2.powi(3)).abs()) * (2.0 * g.powi(2) * m3 * r1 * (r1.powi(9) - 6.0 * r1.powi(6) * r2.powi(3) + 9.0 * r1.powi(4) * r2.powi(5) - 9.0 * r1 * r2.powi(8) + 5.0 * r2.powi(9)) - 3.0 * g * m3 * r1 * (10.0 * r1 * zd * (r1.powi(3) - r2.powi(3)).powi(2) - q * r2.powi(2) * (r1 - r2).powi(3) * (7.0 * r1.powi(3) + 21.0 * r1.powi(2) * r2 + 27.0 * r1 * r2.powi(2) + 20.0 * r2.powi(3))) + 15.0 * q * r2.powi(2) * (3.0 * m3 * r1 * (q * r2.powi(2) * (r1 - r2).powi(2) * (r1 + 2.0 * r2) + 2.0 * r1 * zd * (r1.powi(3) - r2.powi(3))) - 4.0 * zd * (r1.powi(3) - r2.powi(3)).powi(2))).abs()
}

/// `lim α|J4α − J4|` at the respective optima.
pub fn cost_j4(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (b, zd) = (d.b, d.z_d);
    let [_, _, _, m4, m5] = d.m;
    let w_j43 = (33600.0 * m4 * (r1.powi(2) + r1 * r2 + r2.powi(2)) * (3.0 * m5 * r1.powi(2) - r2.powi(2) * (r1 - r2).powi(3)) + (r1 - r2).powi(4) * (320.0 * m5 * (2.0 * r1.powi(4) + 10.0 * r1.powi(3) * r2 + 30.0 * r1.powi(2) * r2.powi(2) + 49.0 * r1 * r2.powi(3) + 35.0 * r2.powi(4)) - r2.powi(2) * (r1 - r2).powi(3) * (99.0 * r1.powi(2) + 152.0 * r1 * r2 + 64.0 * r2.powi(2)))).powi(2);
    16.0 * PI * r1 * (b - zd).powi(2) / w_j43 * (35280000.0 * m4.powi(2) * r2.powi(2) * (r1 + 2.0 * r2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) * (4.0 * m5 * (r1.powi(2) + r1 * r2 + r2.powi(2)) - r2.powi(2) * (r1 - r2).powi(3)) - 4200.0 * m4 * (r1.powi(3) - r2.powi(3)) * (4480.0 * m5.powi(2) * (r1.powi(2) + r1 * r2 + r2.powi(2)).powi(2) * (r1.powi(3) + 3.0 * r1.powi(2) * r2 + 6.0 * r1 * r2.powi(2) + 5.0 * r2.powi(3)) - 8.0 * m5 * r2.powi(2) * (247.0 * r1.powi(5) + 856.0 * r1.powi(4) * r2 + 1963.0 * r1.powi(3) * r2.powi(2) + 2840.0 * r1.powi(2) * r2.powi(3) + 2567.0 * r1 * r2.powi(4) + 1292.0 * r2.powi(5)) * (r1 - r2).powi(3) + r2.powi(4) * (207.0 * r1.powi(3) + 301.0 * r1.powi(2) * r2 + 177.0 * r1 * r2.powi(2) + 50.0 * r2.powi(3)) * (r1 - r2).powi(6)) + (r1 - r2).powi(5) * (16.0 * m5 * r2.powi(2) * (711.0 * r1.powi(7) + 4763.0 * r1.powi(6) * r2 + 17621.0 * r1.powi(5) * r2.powi(2) + 40700.0 * r1.powi(4) * r2.powi(3) + 57025.0 * r1.powi(3) * r2.powi(4) + 44014.0 * r1.powi(2) * r2.powi(5) + 18712.0 * r1 * r2.powi(6) + 3879.0 * r2.powi(7)) * (r1 - r2).powi(3) - 35840.0 * m5.powi(2) * (r1.powi(9) + 10.0 * r1.powi(8) * r2 + 55.0 * r1.powi(7) * r2.powi(2) + 199.0 * r1.powi(6) * r2.powi(3) + 505.0 * r1.powi(5) * r2.powi(4) + 919.0 * r1.powi(4) * r2.powi(5) + 1195.0 * r1.powi(3) * r2.powi(6) + 1060.0 * r1.powi(2) * r2.powi(7) + 601.0 * r1 * r2.powi(8) + 180.0 * r2.powi(9)) - r2.powi(4) * (891.0 * r1.powi(5) + 2880.0 * r1.powi(4) * r2 + 3755.0 * r1.powi(3) * r2.powi(2) + 2480.0 * r1.powi(2) * r2.powi(3) + 875.0 * r1 * r2.powi(4) + 144.0 * r2.powi(5)) * (r1 - r2).powi(6))).abs()
}

/// `α‖u_α − u‖`, which does not depend on α. The gap is constant in `r`, so
/// the H¹ and L² norms coincide.
pub fn state_gap(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    (4.0 * PI * (r2.powi(3) - r1.powi(3)) * (3.0 * d.q * r2.powi(2) + d.g * (r1.powi(3) - r2.powi(3))).powi(2)
        / (27.0 * r1.powi(4)))
    .sqrt()
}

/// Re-derived J3 limit. The printed one carries the wrong sign on the
/// `G6 q r2²/r1 z_d` term of the quadratic form.
pub fn cost_j3_corrected(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    let (g, q, zd) = (d.g, d.q, d.z_d);
    let m3 = d.m[2];
    let poly = -2.0 * g * r1.powi(5) - 2.0 * g * r1.powi(4) * r2 - 2.0 * g * r1.powi(3) * r2.powi(2)
        + 8.0 * g * r1.powi(2) * r2.powi(3)
        + 8.0 * g * r1 * r2.powi(4)
        - 10.0 * g * r2.powi(5)
        - 15.0 * q * r1.powi(2) * r2.powi(2)
        - 15.0 * q * r1 * r2.powi(3)
        + 30.0 * q * r2.powi(4)
        + 30.0 * zd * (r1.powi(3) + r1.powi(2) * r2 + r1 * r2.powi(2));
    2.0 * PI * m3 * (r1 - r2).abs() * (g * (r1.powi(3) - r2.powi(3)) + 3.0 * q * r2.powi(2)).abs() * poly.abs()
        / (45.0 * r1 * (r1.powi(3) - r2.powi(3) - 3.0 * m3 * r1.powi(2)).abs())
}

/// The printed J4 limit lacks a factor `(r2 − r1)³`.
pub fn cost_j4_corrected(r1: f64, r2: f64, d: &ProblemData) -> f64 {
    (r2 - r1).powi(3) * cost_j4(r1, r2, d)
}
