//! Transverse modes of a hard-wall circular boundary ("quantum corral").
//!
//! An electron confined by an impenetrable circle of radius `R` has
//! separable wavefunctions whose radial factor solves the Bessel equation,
//!
//! ```text
//! psi(rho, phi) = A · J_nu(k rho) · e^{i nu phi},    J_nu(k R) = 0,
//! ```
//!
//! so the allowed wavenumbers are `k_{p nu} = j_{nu,p} / R`, with `j_{nu,p}`
//! the p-th positive zero of the Bessel function of the first kind, and the
//! mode energies are
//!
//! ```text
//! E_{p nu} = (hbar^2 / 2m) k_{p nu}^2 .
//! ```
//!
//! `J_nu` is evaluated from its ascending power series at small argument and
//! by Miller's normalized downward recurrence at large argument; zeros are
//! bracketed by a coarse scan and refined by bisection.

use crate::potential::{RingConfig, TWO_M_OVER_HBAR_SQ};
use crate::{Error, Result};

/// Largest Bessel order the evaluator accepts.
pub const MAX_ORDER: u32 = 50;

/// One transverse mode of the circular boundary: the `p`-th radial state
/// with angular momentum `nu` (non-negative; energies depend on |nu| only).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorralMode {
    /// 1-based index of the Bessel zero.
    pub p: usize,
    /// Angular momentum quantum number (canonicalized to |nu|).
    pub nu: u32,
    /// Transverse wavenumber `k = j_{nu,p} / R` in nm⁻¹.
    pub k: f64,
    /// Mode energy `(hbar²/2m) k²` in eV.
    pub energy: f64,
}

/// Evaluates the Bessel function of the first kind `J_nu(x)` for integer
/// order `nu ≤ 50` and `x ≥ 0`.
pub fn bessel_j(nu: u32, x: f64) -> Result<f64> {
    if nu > MAX_ORDER {
        return Err(Error::Domain(format!(
            "Bessel order {nu} exceeds supported maximum {MAX_ORDER}"
        )));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "Bessel argument must be finite and non-negative, got {x}"
        )));
    }
    if x <= 12.0 {
        Ok(series_j(nu, x))
    } else {
        Ok(miller_j(nu, x))
    }
}

/// Ascending power series
/// `J_nu(x) = sum_m (-1)^m / (m! (nu+m)!) (x/2)^{2m+nu}`,
/// accurate at small argument where the terms decay quickly.
fn series_j(nu: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    // term_0 = (x/2)^nu / nu!
    let mut term = 1.0;
    for i in 1..=nu {
        term *= half / i as f64;
    }
    let quarter_sq = half * half;
    let mut sum = term;
    for m in 1..=250u32 {
        term *= -quarter_sq / (m as f64 * (nu + m) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() + 1e-300 {
            break;
        }
    }
    sum
}

/// Miller's algorithm: run the three-term recurrence
/// `J_{k-1} = (2k/x) J_k - J_{k+1}` downward from a start order well above
/// both `nu` and `x`, then fix the overall scale with the identity
/// `J_0 + 2 J_2 + 2 J_4 + ... = 1`.
fn miller_j(nu: u32, x: f64) -> f64 {
    let base = (nu as f64).max(x.floor()) as u32;
    let mut start = base + (40.0 * base as f64).sqrt().ceil() as u32 + 20;
    if start % 2 == 1 {
        start += 1;
    }

    let mut above = 0.0_f64; // J_{k+1}
    let mut here = 1e-30_f64; // J_k, arbitrary tiny seed
    let mut even_sum = if start.is_multiple_of(2) { here } else { 0.0 };
    let mut target = if nu == start { here } else { 0.0 };

    for k in (1..=start).rev() {
        let below = (2.0 * k as f64 / x) * here - above;
        above = here;
        here = below;
        let order = k - 1;
        if order == nu {
            target = here;
        }
        if order % 2 == 0 {
            even_sum += here;
        }
        if here.abs() > 1e250 {
            above /= 1e250;
            here /= 1e250;
            even_sum /= 1e250;
            target /= 1e250;
        }
    }
    // even_sum counted J_0 once; the normalization needs J_0 + 2(J_2 + ...).
    let norm = 2.0 * even_sum - here;
    target / norm
}

/// Returns the p-th positive zero `j_{nu,p}` of `J_nu` (`p ≥ 1`).
pub fn bessel_zero(nu: u32, p: usize) -> Result<f64> {
    if p == 0 {
        return Err(Error::Domain(
            "zero index p is 1-based; p = 0 has no meaning".into(),
        ));
    }
    if nu > MAX_ORDER {
        return Err(Error::Domain(format!(
            "Bessel order {nu} exceeds supported maximum {MAX_ORDER}"
        )));
    }
    // Coarse scan: J_nu has no positive zeros below its order, so start just
    // under max(nu, 1) and look for sign changes in steps of 0.5.
    let step = 0.5;
    let mut x_lo = (nu as f64).max(1.0) - 0.5;
    let mut f_lo = series_or_miller(nu, x_lo);
    let mut found = 0usize;
    for _ in 0..10_000 {
        let x_hi = x_lo + step;
        let f_hi = series_or_miller(nu, x_hi);
        if f_lo == 0.0 && x_lo > 0.0 {
            found += 1;
            if found == p {
                return Ok(x_lo);
            }
        } else if f_lo * f_hi < 0.0 {
            found += 1;
            if found == p {
                return bisect_zero(nu, x_lo, x_hi, f_lo);
            }
        }
        x_lo = x_hi;
        f_lo = f_hi;
    }
    Err(Error::NonConvergence { iterations: 10_000 })
}

fn series_or_miller(nu: u32, x: f64) -> f64 {
    if x <= 12.0 {
        series_j(nu, x)
    } else {
        miller_j(nu, x)
    }
}

/// Bisects a bracketed sign change of `J_nu` down to 1e-12 interval width
/// and verifies the residual.
fn bisect_zero(nu: u32, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64> {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-12 {
            let residual = series_or_miller(nu, mid).abs();
            if residual < 1e-10 {
                return Ok(mid);
            }
            return Err(Error::NonConvergence { iterations: 200 });
        }
        let f_mid = series_or_miller(nu, mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    Err(Error::NonConvergence { iterations: 200 })
}

/// Builds the transverse mode for zero index `p` and angular momentum `nu`
/// (negative `nu` is canonicalized to `|nu|`, which fixes the energy).
pub fn corral_mode(config: &RingConfig, p: usize, nu: i32) -> Result<CorralMode> {
    let order = nu.unsigned_abs();
    let zero = bessel_zero(order, p)?;
    let k = zero / config.radius;
    let energy = k * k / TWO_M_OVER_HBAR_SQ;
    Ok(CorralMode {
        p,
        nu: order,
        k,
        energy,
    })
}
