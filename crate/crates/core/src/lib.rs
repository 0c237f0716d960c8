//! Time-harmonic elastic scattering by dense micro-inclusions, and
//! reconstruction of a variable mass density from far fields measured
//! before and after injecting such an inclusion.
//!
//! The crate is organized in layers:
//!
//! * [`kernels`] — closed-form fundamental tensors (Kupradze, Kelvin), their
//!   far-field patterns, wavenumbers and plane waves;
//! * [`spectrum`] — the Newtonian volume operator on the reference inclusion
//!   shape, its eigensystem, and the resonance frequencies it induces;
//! * [`forward`] — Lippmann–Schwinger volume solvers for the variable
//!   background, Green's columns, the perturbed medium with an injected
//!   inclusion, and far-field extraction;
//! * [`pointsource`] — Herglotz kernels, Tikhonov-regularized point-source
//!   approximation and far-field back-projection to exterior near fields;
//! * [`inversion`] — the five-step density reconstruction over a lattice of
//!   injection locations;
//! * [`scenario`] — configuration, phantoms, synthetic measurement
//!   generation, noise and result emission for the closed-loop experiments.

pub mod error;
pub mod grid;
pub mod kernels;
pub mod sphere;
pub mod spectrum;
pub mod forward;
pub mod pointsource;
pub mod inversion;
pub mod scenario;

pub use error::{Error, Result};
pub use grid::{ComplexField3, ScalarField, VoxelGrid};
pub use kernels::{ElasticMedium, OmegaDomain, PlaneWave, Wavenumbers};
pub use sphere::SphereGrid;
