//! Composition of transverse corral modes and axial bound states into the
//! full 3D spectrum and wavefunction of the ring trap.
//!
//! The separable stationary states are
//!
//! ```text
//! psi_{p nu n}(rho, phi, z) = A · J_nu(k_{p nu} rho) · e^{i nu phi} · Z_n(z),
//! E_{p nu n} = E_{p nu} + E_n,
//! ```
//!
//! with the transverse factor from [`crate::corral`], the axial factor from
//! either perturbation theory ([`crate::perturbation`]) or the Numerov
//! solver ([`crate::numerov`]), and `A` fixed numerically so the state has
//! unit norm over the corral cylinder.

use num_complex::Complex64;

use crate::corral::{bessel_j, corral_mode, CorralMode};
use crate::numerov::{solve_eigenvalue, GridFunction, ShootingProblem};
use crate::perturbation::perturbed_level;
use crate::potential::{taylor_coefficients, RingConfig};
use crate::quad::simpson;
use crate::{Error, Result};

/// Which solver supplies the axial factor of a composite state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxialMethod {
    /// Second-order perturbative energy and first-order corrected state.
    Perturbation,
    /// Numerov shooting eigensolver (legacy fixed-window protocol, which
    /// the reference axial table uses).
    Numerov,
}

/// Axial factor of a composite state.
#[derive(Debug, Clone, PartialEq)]
enum AxialSolution {
    /// Normalized eigenfunction samples from the Numerov solver.
    Grid(GridFunction),
    /// Perturbative basis coefficients and their squared norm.
    Perturbative { coeffs: Vec<(u32, f64)>, norm: f64 },
}

/// One fully composed stationary state of the corral + ring system.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeState {
    /// Transverse mode (p, |nu|, k, E).
    pub mode: CorralMode,
    /// Signed angular momentum as requested; enters the phase factor.
    pub nu: i32,
    /// Axial quantum number.
    pub n: u32,
    /// Axial level E_n in eV.
    pub axial_energy: f64,
    /// Total level E_{p nu n} = E_{p nu} + E_n in eV.
    pub total_energy: f64,
    /// Radial-angular normalization constant A in nm⁻¹.
    pub normalization_a: f64,
    config: RingConfig,
    axial: AxialSolution,
}

/// Composes the transverse mode (p, nu) with axial level n, solving the
/// axial problem with the chosen method.
pub fn total_level(
    config: &RingConfig,
    p: usize,
    nu: i32,
    n: u32,
    method: AxialMethod,
) -> Result<CompositeState> {
    let mode = corral_mode(config, p, nu)?;
    let level = perturbed_level(n, config)?;
    let (axial_energy, axial) = match method {
        AxialMethod::Perturbation => {
            let norm = level.wf_coeffs.iter().map(|&(_, c)| c * c).sum();
            (
                level.axial_energy,
                AxialSolution::Perturbative {
                    coeffs: level.wf_coeffs.clone(),
                    norm,
                },
            )
        }
        AxialMethod::Numerov => {
            let problem = ShootingProblem::fixed_boundary(config, n, level.axial_energy)?;
            let (energy, grid, _) = solve_eigenvalue(&problem, &level)?;
            (energy, AxialSolution::Grid(grid))
        }
    };
    let total_energy = mode.energy + axial_energy;
    let normalization_a = radial_normalization(config, &mode)?;
    Ok(CompositeState {
        mode,
        nu,
        n,
        axial_energy,
        total_energy,
        normalization_a,
        config: *config,
        axial,
    })
}

/// A = 1/sqrt(2π ∫₀ᴿ J_ν(kρ)² ρ dρ), making the transverse factor carry
/// unit norm over the corral cross-section.
fn radial_normalization(config: &RingConfig, mode: &CorralMode) -> Result<f64> {
    // bessel_j cannot fail here: the order was accepted by corral_mode and
    // the argument stays in [0, j_{nu,p}].
    let radial = simpson(
        |rho| {
            let j = bessel_j(mode.nu, mode.k * rho).expect("in-domain Bessel evaluation");
            j * j * rho
        },
        0.0,
        config.radius,
        2048,
    );
    if !(radial.is_finite() && radial > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "degenerate radial norm {radial} for mode (p={}, nu={})",
            mode.p, mode.nu
        )));
    }
    Ok(1.0 / (2.0 * std::f64::consts::PI * radial).sqrt())
}

/// Samples the full complex wavefunction at cylinder coordinates
/// (ρ ≤ R, φ, z).
pub fn sample_full_wavefunction(
    state: &CompositeState,
    rho: f64,
    phi: f64,
    z: f64,
) -> Result<Complex64> {
    if !(0.0..=state.config.radius).contains(&rho) {
        return Err(Error::Domain(format!(
            "rho = {rho} nm lies outside the corral radius {} nm",
            state.config.radius
        )));
    }
    if rho == state.config.radius {
        // Hard wall: the amplitude is pinned to zero at the boundary.
        return Ok(Complex64::new(0.0, 0.0));
    }
    let radial = state.normalization_a * bessel_j(state.mode.nu, state.mode.k * rho)?;
    let axial = match &state.axial {
        AxialSolution::Grid(grid) => grid.value_at(z),
        AxialSolution::Perturbative { coeffs, norm } => {
            let expansion = taylor_coefficients(&state.config);
            let unnormalized: f64 = coeffs
                .iter()
                .map(|&(k, c)| c * crate::oscillator::ho_eigenfunction(k, z, &expansion))
                .sum();
            unnormalized / norm.sqrt()
        }
    };
    let phase = Complex64::new(0.0, state.nu as f64 * phi).exp();
    Ok(radial * axial * phase)
}
