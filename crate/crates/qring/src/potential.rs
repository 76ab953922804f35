//! Electrostatic potential energy on the symmetry axis of a charged ring,
//! and the harmonic-oscillator parameters of its Taylor expansion.
//!
//! A ring of total charge `q·e` and radius `R` attracts an electron on the
//! axis with
//!
//! ```text
//! V(z) = -V0 (1 + z^2/R^2)^{-1/2},        V0 = e q / (4 pi eps0 R),
//! ```
//!
//! which near the minimum expands as
//!
//! ```text
//! V(z) = -V0 + (1/2) m omega^2 z^2 - Lambda1 z^4 + Lambda2 z^6 + ...
//! m omega^2 = V0/R^2,   Lambda1 = 3 V0 / 8 R^4,   Lambda2 = 15 V0 / 48 R^6.
//! ```
//!
//! Everything is expressed in eV and nm with the electron constants below,
//! so energies come out directly in eV.

use crate::{Error, Result};

/// Coulomb coupling e²/4πε₀ in eV·nm.
pub const COULOMB_EV_NM: f64 = 1.44;

/// Electron mass constant 2m/ħ² in eV⁻¹·nm⁻².
pub const TWO_M_OVER_HBAR_SQ: f64 = 26.2468963087034;

/// Physical description of the ring trap: charge in units of `e`, radius in
/// nm, and the derived well depth `V0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingConfig {
    /// Ring charge in multiples of the elementary charge (positive).
    pub charge_q: f64,
    /// Ring radius in nm.
    pub radius: f64,
    /// Well depth `V0 = 1.44 q / R` in eV.
    pub v0: f64,
}

impl RingConfig {
    /// Validates the parameters and derives the well depth.  Only the
    /// attractive arrangement (positive ring charge, electron on the axis)
    /// binds, so non-positive charge is rejected.
    pub fn new(charge_q: f64, radius: f64) -> Result<Self> {
        if !charge_q.is_finite() || charge_q <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "ring charge must be positive and finite (attractive configuration), got {charge_q}"
            )));
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "ring radius must be positive and finite, got {radius} nm"
            )));
        }
        Ok(RingConfig {
            charge_q,
            radius,
            v0: COULOMB_EV_NM * charge_q / radius,
        })
    }
}

/// Harmonic-oscillator parameters extracted from the Taylor expansion of
/// the axial potential about `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorExpansion {
    /// Squared oscillator quantum (ħω)² = 2V₀/((2m/ħ²)R²) in eV².
    pub omega_sq: f64,
    /// Oscillator quantum ħω in eV.
    pub hbar_omega: f64,
    /// Quartic well coefficient Λ₁ = 3V₀/8R⁴ in eV·nm⁻⁴.
    pub lambda1: f64,
    /// Sextic well coefficient Λ₂ = 15V₀/48R⁶ in eV·nm⁻⁶.
    pub lambda2: f64,
    /// Inverse oscillator length √(mω/ħ) in nm⁻¹; ξ = xi_scale·z.
    pub xi_scale: f64,
}

impl OscillatorExpansion {
    /// Squared oscillator length ħ/2mω in nm², the natural unit of the
    /// position-operator matrix elements.
    pub fn length_sq(&self) -> f64 {
        1.0 / (2.0 * self.xi_scale * self.xi_scale)
    }

    /// Whether the expansion sits in the perturbative regime ħω ≪ V₀; a
    /// ratio at or above one makes the order-by-order corrections
    /// meaningless.
    pub fn is_perturbative(&self, config: &RingConfig) -> bool {
        self.hbar_omega / config.v0 < 1.0
    }
}

/// Potential energy −V₀(1 + z²/R²)^(−1/2) of the electron at height `z` on
/// the ring axis, in eV.
pub fn ring_potential(config: &RingConfig, z: f64) -> f64 {
    let u = z / config.radius;
    -config.v0 / (1.0 + u * u).sqrt()
}

/// Expands the axial potential about its minimum and packages the oscillator
/// frequency, the anharmonic coefficients, and the dimensionless length
/// scale.
pub fn taylor_coefficients(config: &RingConfig) -> OscillatorExpansion {
    let r2 = config.radius * config.radius;
    let omega_sq = 2.0 * config.v0 / (TWO_M_OVER_HBAR_SQ * r2);
    let hbar_omega = omega_sq.sqrt();
    let lambda1 = 3.0 * config.v0 / (8.0 * r2 * r2);
    let lambda2 = 15.0 * config.v0 / (48.0 * r2 * r2 * r2);
    let xi_scale = (0.5 * TWO_M_OVER_HBAR_SQ * hbar_omega).sqrt();
    OscillatorExpansion {
        omega_sq,
        hbar_omega,
        lambda1,
        lambda2,
        xi_scale,
    }
}
