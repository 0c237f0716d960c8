//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A Lamé-parameter or density positivity constraint is violated.
    #[error("invalid medium: {0}")]
    InvalidMedium(String),

    /// Kernel evaluation at (numerically) coincident points.
    #[error("singular kernel evaluation: |x - y| = {0:.3e}")]
    SingularKernel(f64),

    /// A plane wave with non-unit or non-orthogonal direction vectors.
    #[error("invalid plane wave: {0}")]
    InvalidWave(String),

    /// Matrix handed to the eigensolver is not symmetric within tolerance.
    #[error("matrix not symmetric: relative asymmetry {0:.3e}")]
    NotSymmetric(f64),

    /// Every eigenfunction has a (numerically) vanishing volume mean.
    #[error("no radiating mode: all moments below {0:.3e}")]
    NoRadiatingMode(f64),

    /// The requested resolvent sits on top of a discrete eigenvalue.
    #[error("resonance collision: 1/((rho1-rho0) omega^2) = {requested:.6e} within guard of eigenvalue {eigenvalue:.6e}")]
    ResonanceCollision { requested: f64, eigenvalue: f64 },

    /// Dense solve failed or did not reach the contracted residual.
    #[error("linear solve failed: relative residual {residual:.3e} (tolerance {tolerance:.1e})")]
    SolveFailed { residual: f64, tolerance: f64 },

    /// Point source placed inside the scattering support.
    #[error("source point inside the inhomogeneity support (distance {0:.3e})")]
    SourceInsideDomain(f64),

    /// Far-field bank and Herglotz kernel refer to different sphere grids.
    #[error("direction set mismatch between far-field data and kernel: {0}")]
    DirectionMismatch(String),

    /// Scalar parameter out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Every lattice node ended up masked.
    #[error("all lattice nodes indeterminate: {0}")]
    AllNodesMasked(String),

    /// Configuration file problems (parse errors carry location info).
    #[error("configuration error: {0}")]
    Config(String),

    /// Geometry constraint violations (inclusion outside domain, lattice too close to boundary, ...).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Cache file exists but was produced with different assembly parameters.
    #[error("cache hash mismatch: expected {expected}, found {found}")]
    CacheMismatch { expected: String, found: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
