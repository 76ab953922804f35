//! Rayleigh–Schrödinger corrections for the anharmonic axial well.
//!
//! About its minimum the axial potential is a harmonic oscillator plus
//!
//! ```text
//! W = -Lambda1 z^4 + Lambda2 z^6,
//! ```
//!
//! treated order by order:
//!
//! ```text
//! E_n^(1) = <n|W|n>
//! E_n^(2) = sum_{k != n} |<k|W|n>|^2 / (E_n^(0) - E_k^(0))
//! |n>^(1) = sum_{k != n} <k|W|n> / (E_n^(0) - E_k^(0)) |k>
//! ```
//!
//! The second-order sum and the state mixing keep the quartic coupling only
//! (the sextic term enters at first order in energy but is of higher order
//! in the small ratio ħω/V₀ everywhere else); an extended variant of the
//! second-order sum that also carries the sextic couplings is provided for
//! comparison.  Total axial levels are `E_n = ℰ_n − V₀` with
//! `ℰ_n = ℰ⁽⁰⁾ + ℰ⁽¹⁾ + ℰ⁽²⁾`.

use crate::oscillator::{build_ladder_matrices, ho_eigenfunction};
use crate::potential::{taylor_coefficients, OscillatorExpansion, RingConfig};
use crate::{Error, Result};

/// Largest level the perturbative treatment accepts; the series degrades
/// with `n` as the state spreads into the anharmonic region.
pub const MAX_LEVEL: u32 = 10;

/// Order-by-order energy pieces and first-order state mixing for one axial
/// level.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbedLevel {
    /// Axial quantum number.
    pub n: u32,
    /// Unperturbed energy ħω(n + ½) in eV.
    pub e0: f64,
    /// First-order correction ⟨n|W|n⟩ in eV.
    pub e1: f64,
    /// Second-order correction in eV.
    pub e2: f64,
    /// Corrected oscillator energy ℰₙ = e0 + e1 + e2 in eV.
    pub script_e: f64,
    /// Axial level Eₙ = ℰₙ − V₀ in eV (measured from the detached electron).
    pub axial_energy: f64,
    /// Basis coefficients (k, c_k) of the first-order corrected state,
    /// including the unit coefficient at k = n; unnormalized.
    pub wf_coeffs: Vec<(u32, f64)>,
    /// Set when the corrections are too large for the series to be trusted
    /// (|e1 + e2| > 0.1·e0, or ħω ≥ V₀).
    pub series_suspect: bool,
}

/// First-order energy shift
/// `−3(ħω)²/32V₀·(6n²+6n+3) + 15(ħω)³/384V₀²·(20n³+30n²+40n+15)`, here
/// written through Λ₁, Λ₂ and the oscillator length so it needs only the
/// expansion.
pub fn first_order_energy(n: u32, expansion: &OscillatorExpansion) -> f64 {
    let s2 = expansion.length_sq();
    let nf = n as f64;
    let quartic_diag = 6.0 * nf * nf + 6.0 * nf + 3.0;
    let sextic_diag = 20.0 * nf * nf * nf + 30.0 * nf * nf + 40.0 * nf + 15.0;
    -expansion.lambda1 * s2 * s2 * quartic_diag + expansion.lambda2 * s2 * s2 * s2 * sextic_diag
}

/// Second-order energy shift from the quartic coupling alone: a sum over
/// the virtual states k = n±2, n±4 with denominators (n−k)ħω.
pub fn second_order_energy(n: u32, expansion: &OscillatorExpansion) -> f64 {
    let matrices = build_ladder_matrices(n as usize);
    let s2 = expansion.length_sq();
    let quartic = -expansion.lambda1 * s2 * s2;
    let mut sum = 0.0;
    for k in coupled_indices(n, &[2, 4]) {
        let w = quartic * matrices.z4[(k as usize, n as usize)];
        sum += w * w / ((n as f64 - k as f64) * expansion.hbar_omega);
    }
    sum
}

/// Second-order energy shift keeping the sextic couplings as well
/// (virtual states out to k = n±6); not used for the reference tables.
pub fn second_order_energy_extended(n: u32, expansion: &OscillatorExpansion) -> f64 {
    let matrices = build_ladder_matrices(n as usize);
    let s2 = expansion.length_sq();
    let quartic = -expansion.lambda1 * s2 * s2;
    let sextic = expansion.lambda2 * s2 * s2 * s2;
    let mut sum = 0.0;
    for k in coupled_indices(n, &[2, 4, 6]) {
        let w = quartic * matrices.z4[(k as usize, n as usize)]
            + sextic * matrices.z6[(k as usize, n as usize)];
        sum += w * w / ((n as f64 - k as f64) * expansion.hbar_omega);
    }
    sum
}

/// Indices k = n ± gap (gap in `gaps`) that exist in the basis.
fn coupled_indices(n: u32, gaps: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * gaps.len());
    for &gap in gaps {
        if n >= gap {
            out.push(n - gap);
        }
        out.push(n + gap);
    }
    out
}

/// First-order state-mixing coefficients c_k = ⟨k|W|n⟩/((n−k)ħω) for the
/// quartic coupling, k = n±2, n±4.
fn correction_coefficients(n: u32, expansion: &OscillatorExpansion) -> Vec<(u32, f64)> {
    let matrices = build_ladder_matrices(n as usize);
    let s2 = expansion.length_sq();
    let quartic = -expansion.lambda1 * s2 * s2;
    coupled_indices(n, &[2, 4])
        .into_iter()
        .map(|k| {
            let w = quartic * matrices.z4[(k as usize, n as usize)];
            (k, w / ((n as f64 - k as f64) * expansion.hbar_omega))
        })
        .collect()
}

/// Assembles the full perturbative description of axial level `n ≤ 10`.
pub fn perturbed_level(n: u32, config: &RingConfig) -> Result<PerturbedLevel> {
    if n > MAX_LEVEL {
        return Err(Error::Domain(format!(
            "perturbative axial levels are supported up to n = {MAX_LEVEL}, got n = {n}"
        )));
    }
    let expansion = taylor_coefficients(config);
    let e0 = expansion.hbar_omega * (n as f64 + 0.5);
    let e1 = first_order_energy(n, &expansion);
    let e2 = second_order_energy(n, &expansion);
    let script_e = e0 + e1 + e2;

    let mut wf_coeffs = vec![(n, 1.0)];
    wf_coeffs.extend(correction_coefficients(n, &expansion));
    wf_coeffs.sort_by_key(|&(k, _)| k);

    Ok(PerturbedLevel {
        n,
        e0,
        e1,
        e2,
        script_e,
        axial_energy: script_e - config.v0,
        wf_coeffs,
        series_suspect: (e1 + e2).abs() > 0.1 * e0 || !expansion.is_perturbative(config),
    })
}

/// Evaluates the first-order corrected axial state Z_n(z), unnormalized
/// (the k = n component keeps unit weight).
pub fn corrected_wavefunction(n: u32, config: &RingConfig, z: f64) -> Result<f64> {
    let level = perturbed_level(n, config)?;
    let expansion = taylor_coefficients(config);
    Ok(level
        .wf_coeffs
        .iter()
        .map(|&(k, c)| c * ho_eigenfunction(k, z, &expansion))
        .sum())
}

/// Squared norm ∫Z_n² dz of the unnormalized corrected state; equals the
/// coefficient sum Σc_k² by orthonormality of the basis.
pub fn corrected_norm(n: u32, config: &RingConfig) -> Result<f64> {
    let level = perturbed_level(n, config)?;
    Ok(level.wf_coeffs.iter().map(|&(_, c)| c * c).sum())
}
