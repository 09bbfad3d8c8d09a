//! Uniform node sets on the reduced interval.

use crate::error::{BenchError, Result};
use crate::problem::{DomainGeometry, GeometryKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    pub geometry: GeometryKind,
    /// Number of intervals.
    pub n: usize,
    pub nodes: Vec<f64>,
    pub h: f64,
}

impl Grid1D {
    /// `n` intervals; `n` must be even and at least 8 so Simpson's rule
    /// applies.
    pub fn new(geom: &DomainGeometry, n: usize) -> Result<Self> {
        if n < 8 || !n.is_multiple_of(2) {
            return Err(BenchError::Argument(format!("grid needs an even n >= 8, got {n}")));
        }
        let (lo, hi) = geom.interval();
        let h = (hi - lo) / n as f64;
        // The last node is pinned so the interval end is hit exactly.
        let nodes = (0..=n).map(|i| if i == n { hi } else { lo + i as f64 * h }).collect();
        Ok(Self { geometry: geom.kind(), n, nodes, h })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_the_interval() {
        let g = Grid1D::new(&DomainGeometry::annulus(1.0, 2.5).unwrap(), 10).unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g.nodes[0], 1.0);
        assert_eq!(g.nodes[10], 2.5);
    }

    #[test]
    fn rejects_odd_or_small() {
        let geom = DomainGeometry::rectangle(1.0, 1.0).unwrap();
        assert!(Grid1D::new(&geom, 7).is_err());
        assert!(Grid1D::new(&geom, 6).is_err());
    }
}
