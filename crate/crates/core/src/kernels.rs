//! Fundamental tensors of homogeneous isotropic elastodynamics.
//!
//! Everything here is closed-form: the frequency-domain Kupradze tensor, its
//! zero-frequency (Kelvin) limit, the far-field patterns of both wave types,
//! and plane incident waves. The Kupradze tensor is evaluated with analytic
//! radial second derivatives; a short power series takes over near the
//! singularity where the closed form cancels catastrophically.

use crate::error::{Error, Result};
use crate::grid::ScalarField;
use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Switch from the closed form to the series when `kappa_s * r` drops below this.
const SERIES_SWITCH: f64 = 1e-6;
/// Series length used on the small-argument branch.
const SERIES_TERMS_SMALL: usize = 10;

/// Ball descriptor for the imaging domain Ω.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaDomain {
    pub center: Vector3<f64>,
    pub radius: f64,
}

impl OmegaDomain {
    pub fn contains(&self, x: Vector3<f64>) -> bool {
        (x - self.center).norm() <= self.radius
    }
}

/// Isotropic elastic background: constant Lamé parameters, constant exterior
/// density `rho_tilde`, and a sampled variable density over Ω.
#[derive(Debug, Clone)]
pub struct ElasticMedium {
    pub lam: f64,
    pub mu: f64,
    pub rho_tilde: f64,
    pub rho: ScalarField,
    pub omega_domain: OmegaDomain,
}

impl ElasticMedium {
    pub fn new(
        lam: f64,
        mu: f64,
        rho_tilde: f64,
        rho: ScalarField,
        omega_domain: OmegaDomain,
    ) -> Result<Self> {
        validate_lame(lam, mu)?;
        if rho_tilde <= 0.0 {
            return Err(Error::InvalidMedium(format!(
                "exterior density must be positive, got {rho_tilde}"
            )));
        }
        if rho.min() <= 0.0 {
            return Err(Error::InvalidMedium(format!(
                "density field must be strictly positive, min = {}",
                rho.min()
            )));
        }
        Ok(Self { lam, mu, rho_tilde, rho, omega_domain })
    }

    /// Homogeneous medium (ρ0 ≡ ρ̃0 on a trivial one-cell grid): handy wherever
    /// only the constant background enters.
    pub fn homogeneous(lam: f64, mu: f64, rho_tilde: f64) -> Result<Self> {
        let grid = std::sync::Arc::new(crate::grid::VoxelGrid::new(
            Vector3::zeros(),
            1.0,
            vec![[0, 0, 0]],
        ));
        let rho = ScalarField::constant(grid, rho_tilde);
        Self::new(lam, mu, rho_tilde, rho, OmegaDomain { center: Vector3::zeros(), radius: 1.0 })
    }

    /// Density contrast ρ0 − ρ̃0 at sample `i` of the Ω grid.
    pub fn contrast(&self, i: usize) -> f64 {
        self.rho.values[i] - self.rho_tilde
    }

    pub fn c_s(&self) -> f64 {
        (self.mu / self.rho_tilde).sqrt()
    }

    pub fn c_p(&self) -> f64 {
        ((self.lam + 2.0 * self.mu) / self.rho_tilde).sqrt()
    }

    /// Kelvin coefficients γ1 = (1/μ + 1/(2μ+λ))/2, γ2 = (1/μ − 1/(2μ+λ))/2.
    pub fn kelvin_coefficients(&self) -> (f64, f64) {
        let g1 = 0.5 * (1.0 / self.mu + 1.0 / (2.0 * self.mu + self.lam));
        let g2 = 0.5 * (1.0 / self.mu - 1.0 / (2.0 * self.mu + self.lam));
        (g1, g2)
    }
}

pub(crate) fn validate_lame(lam: f64, mu: f64) -> Result<()> {
    if mu <= 0.0 {
        return Err(Error::InvalidMedium(format!("μ > 0 violated: μ = {mu}")));
    }
    if 3.0 * lam + 2.0 * mu <= 0.0 {
        return Err(Error::InvalidMedium(format!(
            "3λ + 2μ > 0 violated: 3·{lam} + 2·{mu} = {}",
            3.0 * lam + 2.0 * mu
        )));
    }
    Ok(())
}

/// Longitudinal/transversal wavenumbers and phase velocities at a frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wavenumbers {
    pub kappa_p: f64,
    pub kappa_s: f64,
    pub c_p: f64,
    pub c_s: f64,
}

pub fn wavenumbers(medium: &ElasticMedium, omega: f64) -> Result<Wavenumbers> {
    validate_lame(medium.lam, medium.mu)?;
    if omega < 0.0 {
        return Err(Error::InvalidParameter(format!("omega must be nonnegative, got {omega}")));
    }
    let c_s = medium.c_s();
    let c_p = medium.c_p();
    Ok(Wavenumbers { kappa_p: omega / c_p, kappa_s: omega / c_s, c_p, c_s })
}

/// Plane incident wave β1 θ e^{iκp θ·x} + β2 θ⊥ e^{iκs θ·x}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub theta: Vector3<f64>,
    pub theta_perp: Vector3<f64>,
    pub beta1: Complex64,
    pub beta2: Complex64,
    pub omega: f64,
}

impl PlaneWave {
    pub fn new(
        theta: Vector3<f64>,
        theta_perp: Vector3<f64>,
        beta1: Complex64,
        beta2: Complex64,
        omega: f64,
    ) -> Result<Self> {
        let tol = 1e-12;
        if (theta.norm() - 1.0).abs() > tol {
            return Err(Error::InvalidWave(format!("|theta| = {} is not 1", theta.norm())));
        }
        if (theta_perp.norm() - 1.0).abs() > tol {
            return Err(Error::InvalidWave(format!(
                "|theta_perp| = {} is not 1",
                theta_perp.norm()
            )));
        }
        if theta.dot(&theta_perp).abs() > tol {
            return Err(Error::InvalidWave(format!(
                "theta · theta_perp = {:.3e} is not 0",
                theta.dot(&theta_perp)
            )));
        }
        if omega <= 0.0 {
            return Err(Error::InvalidWave(format!("omega must be positive, got {omega}")));
        }
        Ok(Self { theta, theta_perp, beta1, beta2, omega })
    }

    /// Pure pressure wave along `theta`.
    pub fn pressure(theta: Vector3<f64>, omega: f64) -> Result<Self> {
        let perp = any_tangent(theta);
        Self::new(theta, perp, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), omega)
    }

    /// Pure shear wave along `theta`, polarized along `theta_perp`.
    pub fn shear(theta: Vector3<f64>, theta_perp: Vector3<f64>, omega: f64) -> Result<Self> {
        Self::new(theta, theta_perp, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), omega)
    }

    /// The incident wave `β1 x̂ e^{−iκp x̂·y} + β2 x̂⊥ e^{−iκs x̂·y}` that mixed
    /// reciprocity pairs with observation direction `x̂`: a plane wave running
    /// along `−x̂` with p-polarization flipped to point back along `+x̂`.
    pub fn reversed_probe(
        xhat: Vector3<f64>,
        xperp: Vector3<f64>,
        beta1: Complex64,
        beta2: Complex64,
        omega: f64,
    ) -> Result<Self> {
        Self::new(-xhat, xperp, -beta1, beta2, omega)
    }
}

/// Deterministic unit tangent to `v`.
pub fn any_tangent(v: Vector3<f64>) -> Vector3<f64> {
    let trial = if v.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    let t = trial - v * trial.dot(&v);
    t / t.norm()
}

/// Evaluate the plane wave at a point.
pub fn plane_wave_field(
    wave: &PlaneWave,
    x: Vector3<f64>,
    medium: &ElasticMedium,
) -> Vector3<Complex64> {
    let wn = wavenumbers(medium, wave.omega).expect("validated medium");
    let i = Complex64::i();
    let ep = (i * wn.kappa_p * wave.theta.dot(&x)).exp();
    let es = (i * wn.kappa_s * wave.theta.dot(&x)).exp();
    wave.theta.map(|c| Complex64::new(c, 0.0)) * (wave.beta1 * ep)
        + wave.theta_perp.map(|c| Complex64::new(c, 0.0)) * (wave.beta2 * es)
}

/// Kelvin (elastostatic) tensor Γ0(x,y).
pub fn kelvin_matrix(
    x: Vector3<f64>,
    y: Vector3<f64>,
    medium: &ElasticMedium,
) -> Result<Matrix3<f64>> {
    let d = x - y;
    let r = d.norm();
    if r < 1e-14 {
        return Err(Error::SingularKernel(r));
    }
    let (g1, g2) = medium.kelvin_coefficients();
    let mut m = Matrix3::identity() * (g1 / (4.0 * PI * r));
    let c = g2 / (4.0 * PI * r * r * r);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] += c * d[i] * d[j];
        }
    }
    Ok(m)
}

/// Kupradze tensor Γω(x,y): outgoing fundamental solution at frequency ω.
///
/// The anisotropic part carries analytic second derivatives of
/// (e^{iκs r} − e^{iκp r})/r. For κs·r below [`SERIES_SWITCH`] the power
/// series is used instead (the closed form loses all digits there).
pub fn kupradze_matrix(
    x: Vector3<f64>,
    y: Vector3<f64>,
    omega: f64,
    medium: &ElasticMedium,
) -> Result<Matrix3<Complex64>> {
    if omega <= 0.0 {
        return Err(Error::InvalidParameter(format!("omega must be positive, got {omega}")));
    }
    let d = x - y;
    let r = d.norm();
    if r < 1e-14 {
        return Err(Error::SingularKernel(r));
    }
    let wn = wavenumbers(medium, omega)?;
    if wn.kappa_s * r < SERIES_SWITCH {
        return Ok(kupradze_series(x, y, omega, medium, SERIES_TERMS_SMALL)?);
    }
    let rhat = d / r;
    let i = Complex64::i();
    let es = (i * wn.kappa_s * r).exp();
    let ep = (i * wn.kappa_p * r).exp();
    let r3 = r * r * r;

    // For g(r) = e^{iκr}/r:  g'' = e^{iκr}(2 − 2iκr − κ²r²)/r³,  g'/r = e^{iκr}(iκr − 1)/r³.
    let second = |e: Complex64, k: f64| e * Complex64::new(2.0 - k * k * r * r, -2.0 * k * r) / r3;
    let first_over_r = |e: Complex64, k: f64| e * Complex64::new(-1.0, k * r) / r3;

    let dpp = second(es, wn.kappa_s) - second(ep, wn.kappa_p);
    let dor = first_over_r(es, wn.kappa_s) - first_over_r(ep, wn.kappa_p);

    let pref = 1.0 / (4.0 * PI * omega * omega * medium.rho_tilde);
    let iso = es / (4.0 * PI * medium.mu * r) + pref * dor;
    let dir = pref * (dpp - dor);

    let mut m = Matrix3::from_diagonal_element(iso);
    for a in 0..3 {
        for b in 0..3 {
            m[(a, b)] += dir * rhat[a] * rhat[b];
        }
    }
    Ok(m)
}

/// Truncated power series of Γω(x,y) (`n_terms` terms). Term n = 0 is the
/// Kelvin tensor exactly, so the tail starting at n = 1 is Γω − Γ0.
pub fn kupradze_series(
    x: Vector3<f64>,
    y: Vector3<f64>,
    omega: f64,
    medium: &ElasticMedium,
    n_terms: usize,
) -> Result<Matrix3<Complex64>> {
    let d = x - y;
    let r = d.norm();
    if r < 1e-14 {
        return Err(Error::SingularKernel(r));
    }
    Ok(series_partial(d, r, omega, medium, 0, n_terms))
}

/// Bounded difference Γω − Γ0; defined for all x, y including x = y.
pub fn kupradze_minus_kelvin(
    x: Vector3<f64>,
    y: Vector3<f64>,
    omega: f64,
    medium: &ElasticMedium,
) -> Result<Matrix3<Complex64>> {
    let d = x - y;
    let r = d.norm();
    let wn = wavenumbers(medium, omega)?;
    if r < 1e-14 {
        // Limit value: only the n = 1 isotropic series term survives.
        let v = Complex64::i() * omega / (12.0 * PI * medium.rho_tilde)
            * (2.0 / wn.c_s.powi(3) + 1.0 / wn.c_p.powi(3));
        return Ok(Matrix3::from_diagonal_element(v));
    }
    if wn.kappa_s * r < 0.5 {
        return Ok(series_partial(d, r, omega, medium, 1, 30));
    }
    let full = kupradze_matrix(x, y, omega, medium)?;
    let kelvin = kelvin_matrix(x, y, medium)?;
    Ok(full - kelvin.map(|v| Complex64::new(v, 0.0)))
}

fn series_partial(
    d: Vector3<f64>,
    r: f64,
    omega: f64,
    medium: &ElasticMedium,
    n_start: usize,
    n_terms: usize,
) -> Matrix3<Complex64> {
    let c_s = medium.c_s();
    let c_p = medium.c_p();
    let ks = omega / c_s;
    let kp = omega / c_p;
    let rhat = d / r;
    let pref = 1.0 / (4.0 * PI * medium.rho_tilde);

    let mut iso = Complex64::new(0.0, 0.0);
    let mut dir = Complex64::new(0.0, 0.0);
    // Running factors: i^n (κ r)^n / n!, one per wave speed.
    let mut ts = Complex64::new(1.0, 0.0);
    let mut tp = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    for n in 0..(n_start + n_terms) {
        if n >= n_start {
            let nf = n as f64;
            let a = (ts * (nf + 1.0) / (c_s * c_s) + tp / (c_p * c_p)) / (nf + 2.0);
            let b = (ts / (c_s * c_s) - tp / (c_p * c_p)) * (nf - 1.0) / (nf + 2.0);
            iso += a / r;
            dir -= b / r;
        }
        let np1 = (n + 1) as f64;
        ts *= i * ks * r / np1;
        tp *= i * kp * r / np1;
    }
    let mut m = Matrix3::from_diagonal_element(pref * iso);
    let c = pref * dir;
    for a in 0..3 {
        for b in 0..3 {
            m[(a, b)] += c * rhat[a] * rhat[b];
        }
    }
    m
}

/// Far-field patterns of the Kupradze tensor: the coefficients of
/// e^{iκp|x|}/|x| and e^{iκs|x|}/|x| in its large-|x| expansion.
pub fn farfield_pattern(
    xhat: Vector3<f64>,
    y: Vector3<f64>,
    omega: f64,
    medium: &ElasticMedium,
) -> (Matrix3<Complex64>, Matrix3<Complex64>) {
    debug_assert!((xhat.norm() - 1.0).abs() < 1e-10, "observation direction must be unit");
    let wn = wavenumbers(medium, omega).expect("validated medium");
    let i = Complex64::i();
    let phase_p = (-i * wn.kappa_p * xhat.dot(&y)).exp() / (4.0 * PI * (medium.lam + 2.0 * medium.mu));
    let phase_s = (-i * wn.kappa_s * xhat.dot(&y)).exp() / (4.0 * PI * medium.mu);
    let mut p = Matrix3::zeros();
    let mut s = Matrix3::zeros();
    for a in 0..3 {
        for b in 0..3 {
            let proj = xhat[a] * xhat[b];
            p[(a, b)] = phase_p * proj;
            let id = if a == b { 1.0 } else { 0.0 };
            s[(a, b)] = phase_s * (id - proj);
        }
    }
    (p, s)
}
