//! Quadrature grids on the unit sphere.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Node/weight set on S². Weights sum to 4π.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereGrid {
    pub nodes: Vec<Vector3<f64>>,
    pub weights: Vec<f64>,
}

impl SphereGrid {
    /// Fibonacci (golden-spiral) node set with equal weights 4π/n.
    pub fn fibonacci(n: usize) -> Self {
        assert!(n >= 4, "need at least 4 sphere nodes");
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let mut nodes = Vec::with_capacity(n);
        for k in 0..n {
            // Offset lattice avoids placing nodes exactly at the poles.
            let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let phi = 2.0 * PI * (k as f64 / golden).fract();
            nodes.push(Vector3::new(rho * phi.cos(), rho * phi.sin(), z));
        }
        let w = 4.0 * PI / n as f64;
        Self { nodes, weights: vec![w; n] }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Mirror image: node k maps to −node k, same weights.
    pub fn mirrored(&self) -> Self {
        Self { nodes: self.nodes.iter().map(|n| -n).collect(), weights: self.weights.clone() }
    }

    /// True when `other` is the mirror of `self`, node by node.
    pub fn is_mirror_of(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .nodes
                .iter()
                .zip(&other.nodes)
                .all(|(a, b)| (a + b).norm() <= tol)
    }

    /// Deterministic orthonormal tangent pair at each node.
    pub fn tangent(&self, k: usize) -> (Vector3<f64>, Vector3<f64>) {
        let n = self.nodes[k];
        let t1 = crate::kernels::any_tangent(n);
        let t2 = n.cross(&t1);
        (t1, t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn weights_sum_to_sphere_area() {
        for &n in &[16usize, 64, 127] {
            let g = SphereGrid::fibonacci(n);
            assert_relative_eq!(g.weight_sum(), 4.0 * PI, epsilon = 1e-10);
        }
    }

    #[test]
    fn nodes_are_unit() {
        let g = SphereGrid::fibonacci(64);
        for n in &g.nodes {
            assert_relative_eq!(n.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn quadrature_integrates_low_order_moments() {
        let g = SphereGrid::fibonacci(128);
        // ∫ x_i x_j dS = (4π/3) δ_ij.
        for i in 0..3 {
            for j in 0..3 {
                let v: f64 =
                    g.nodes.iter().zip(&g.weights).map(|(n, w)| n[i] * n[j] * w).sum();
                let expect = if i == j { 4.0 * PI / 3.0 } else { 0.0 };
                assert!((v - expect).abs() < 2e-2, "moment ({i},{j}) = {v}");
            }
        }
    }

    #[test]
    fn mirror_roundtrip() {
        let g = SphereGrid::fibonacci(32);
        let m = g.mirrored();
        assert!(g.is_mirror_of(&m, 1e-14));
        assert!(m.mirrored() == g);
    }

    #[test]
    fn tangents_orthonormal() {
        let g = SphereGrid::fibonacci(32);
        for k in 0..g.len() {
            let (t1, t2) = g.tangent(k);
            let n = g.nodes[k];
            assert!(t1.dot(&n).abs() < 1e-12);
            assert!(t2.dot(&n).abs() < 1e-12);
            assert!(t1.dot(&t2).abs() < 1e-12);
            assert_relative_eq!(t1.norm(), 1.0, epsilon = 1e-12);
            assert_relative_eq!(t2.norm(), 1.0, epsilon = 1e-12);
        }
    }
}
