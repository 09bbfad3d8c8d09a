//! Composite Simpson quadrature of squared fields against the domain weight.

use crate::problem::DomainGeometry;

/// Composite Simpson rule for `∫_lo^hi f` on `n` (even) intervals.
pub fn simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    assert!(n >= 2 && n.is_multiple_of(2), "Simpson's rule needs an even number of intervals");
    let h = (hi - lo) / n as f64;
    let mut acc = f(lo) + f(hi);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// `∫_Ω f²`, reduced to the 1D interval with weight `y0`, `2πr` or `4πr²`.
/// Returns the squared norm.
pub fn weighted_l2(geom: &DomainGeometry, f: impl Fn(f64) -> f64, n: usize) -> f64 {
    let (lo, hi) = geom.interval();
    simpson(
        |t| {
            let v = f(t);
            v * v * geom.volume_weight(t)
        },
        lo,
        hi,
        n,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn unit_field_gives_volume() {
        assert_relative_eq!(weighted_l2(&DomainGeometry::rectangle(1.0, 1.0).unwrap(), |_| 1.0, 8), 1.0);
        assert_relative_eq!(
            weighted_l2(&DomainGeometry::annulus(1.0, 2.0).unwrap(), |_| 1.0, 8),
            3.0 * PI,
            max_relative = 1e-14
        );
    }

    #[test]
    fn radial_field_on_shell() {
        let v = weighted_l2(&DomainGeometry::shell(1.0, 2.0).unwrap(), |r| r, 64);
        assert_relative_eq!(v, 124.0 * PI / 5.0, max_relative = 1e-8);
    }

    #[test]
    fn fourth_order() {
        let f = |t: f64| t.exp();
        let exact = 1f64.exp() - 1.0;
        let e1 = (simpson(f, 0.0, 1.0, 8) - exact).abs();
        let e2 = (simpson(f, 0.0, 1.0, 16) - exact).abs();
        assert!((e1 / e2 - 16.0).abs() < 0.5, "ratio {}", e1 / e2);
    }
}
