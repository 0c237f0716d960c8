//! Voxel grids and fields sampled on them.
//!
//! Scattering supports (the imaging domain, the reference inclusion shape and
//! its scaled copies) are all represented as collections of equal cubic cells.
//! Quadrature of volume potentials over these grids is midpoint-rule based,
//! so a grid is just its cell centers plus the common cell volume.

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Axis-aligned voxelization of a bounded region.
///
/// `origin` is the center of the *index-(0,0,0)* cell; cell `(i,j,k)` has
/// center `origin + spacing * (i,j,k)`. Only occupied cells are stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VoxelGrid {
    pub origin: Vector3<f64>,
    pub spacing: f64,
    pub cells: Vec<[i32; 3]>,
}

impl VoxelGrid {
    pub fn new(origin: Vector3<f64>, spacing: f64, cells: Vec<[i32; 3]>) -> Self {
        assert!(spacing > 0.0, "voxel spacing must be positive");
        Self { origin, spacing, cells }
    }

    /// Voxelize the ball of radius `radius` centered at `center` with
    /// `n` cells across the diameter. A cell is occupied when its center
    /// lies inside the ball.
    pub fn ball(center: Vector3<f64>, radius: f64, n: usize) -> Self {
        Self::ellipsoid(center, Vector3::new(radius, radius, radius), n)
    }

    /// Voxelize an axis-aligned ellipsoid with semiaxes `semi`. The spacing
    /// is set by the largest semiaxis so the shape fits an `n`-cell cube.
    pub fn ellipsoid(center: Vector3<f64>, semi: Vector3<f64>, n: usize) -> Self {
        assert!(n >= 2, "need at least 2 cells per axis");
        let rmax = semi.max();
        let spacing = 2.0 * rmax / n as f64;
        // Symmetric arrangement: centers at (i + 1/2 - n/2) * spacing.
        let mut cells = Vec::new();
        let offset = 0.5 - 0.5 * n as f64;
        for i in 0..n as i32 {
            for j in 0..n as i32 {
                for k in 0..n as i32 {
                    let c = Vector3::new(
                        (i as f64 + offset) * spacing,
                        (j as f64 + offset) * spacing,
                        (k as f64 + offset) * spacing,
                    );
                    let q = Vector3::new(c.x / semi.x, c.y / semi.y, c.z / semi.z);
                    if q.norm_squared() <= 1.0 {
                        cells.push([i, j, k]);
                    }
                }
            }
        }
        let origin = center + Vector3::new(offset, offset, offset) * spacing;
        Self::new(origin, spacing, cells)
    }

    /// Ball of unit volume (radius (3/4π)^{1/3}) centered at the origin.
    pub fn unit_volume_ball(n: usize) -> Self {
        let r = (3.0 / (4.0 * std::f64::consts::PI)).powf(1.0 / 3.0);
        Self::ball(Vector3::zeros(), r, n)
    }

    /// Ellipsoid of unit volume with semiaxis ratios `ratios` (their product
    /// is normalized away), centered at the origin.
    pub fn unit_volume_ellipsoid(ratios: Vector3<f64>, n: usize) -> Self {
        let r = (3.0 / (4.0 * std::f64::consts::PI)).powf(1.0 / 3.0);
        let geo = (ratios.x * ratios.y * ratios.z).powf(1.0 / 3.0);
        Self::ellipsoid(Vector3::zeros(), ratios * (r / geo), n)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing * self.spacing * self.spacing
    }

    pub fn total_volume(&self) -> f64 {
        self.cell_volume() * self.len() as f64
    }

    pub fn center(&self, idx: usize) -> Vector3<f64> {
        let c = self.cells[idx];
        self.origin + Vector3::new(c[0] as f64, c[1] as f64, c[2] as f64) * self.spacing
    }

    pub fn centers(&self) -> impl Iterator<Item = Vector3<f64>> + '_ {
        (0..self.len()).map(|i| self.center(i))
    }

    /// Radius of the ball with the same volume as one cell; used for the
    /// analytic self-cell integrals of weakly singular kernels.
    pub fn equivalent_cell_radius(&self) -> f64 {
        (3.0 * self.cell_volume() / (4.0 * std::f64::consts::PI)).powf(1.0 / 3.0)
    }

    /// Same cell topology scaled about the coordinate origin by `a`.
    pub fn scaled(&self, a: f64) -> Self {
        assert!(a > 0.0);
        Self { origin: self.origin * a, spacing: self.spacing * a, cells: self.cells.clone() }
    }

    pub fn translated(&self, shift: Vector3<f64>) -> Self {
        Self { origin: self.origin + shift, spacing: self.spacing, cells: self.cells.clone() }
    }

    /// Largest center-to-center distance, a cheap stand-in for the diameter.
    pub fn extent(&self) -> f64 {
        let mut lo = Vector3::repeat(f64::INFINITY);
        let mut hi = Vector3::repeat(f64::NEG_INFINITY);
        for c in self.centers() {
            lo = lo.inf(&c);
            hi = hi.sup(&c);
        }
        (hi - lo).norm() + self.spacing
    }
}

/// Real scalar field sampled at the cell centers of a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarField {
    pub grid: Arc<VoxelGrid>,
    pub values: Vec<f64>,
}

impl ScalarField {
    pub fn new(grid: Arc<VoxelGrid>, values: Vec<f64>) -> Self {
        assert_eq!(grid.len(), values.len(), "value count must match cell count");
        Self { grid, values }
    }

    pub fn constant(grid: Arc<VoxelGrid>, value: f64) -> Self {
        let n = grid.len();
        Self::new(grid, vec![value; n])
    }

    pub fn from_fn(grid: Arc<VoxelGrid>, f: impl Fn(Vector3<f64>) -> f64) -> Self {
        let values = grid.centers().map(f).collect();
        Self::new(grid, values)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Complex 3-vector field on a voxel grid (total fields, Green's columns, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField3 {
    pub grid: Arc<VoxelGrid>,
    pub values: Vec<Vector3<Complex64>>,
}

impl ComplexField3 {
    pub fn new(grid: Arc<VoxelGrid>, values: Vec<Vector3<Complex64>>) -> Self {
        assert_eq!(grid.len(), values.len(), "value count must match cell count");
        Self { grid, values }
    }

    /// Volume-weighted L2 norm.
    pub fn norm(&self) -> f64 {
        let w = self.grid.cell_volume();
        (self.values.iter().map(|v| v.norm_squared()).sum::<f64>() * w).sqrt()
    }

    /// Volume sum (midpoint quadrature of the field over its support).
    pub fn volume_sum(&self) -> Vector3<Complex64> {
        let w = Complex64::new(self.grid.cell_volume(), 0.0);
        self.values.iter().fold(Vector3::zeros(), |acc, v| acc + v) * w
    }
}
