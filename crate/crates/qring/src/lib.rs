//! Bound states of an electron trapped on the symmetry axis of a uniformly
//! charged ring.
//!
//! The electron moves inside a hard-wall cylindrical region (a "corral") of
//! radius `R` threaded by the ring's electrostatic field.  The problem
//! separates into
//!
//! ```text
//! psi(rho, phi, z) = A · J_nu(k_{p nu} rho) · e^{i nu phi} · Z_n(z)
//! E_{p nu n}       = E_{p nu} + E_n
//! ```
//!
//! where the transverse part is fixed by the zeros of the Bessel functions
//! of the first kind ([`corral`]) and the axial part is a one-dimensional
//! bound-state problem in the on-axis ring potential ([`potential`]).  The
//! axial levels are computed two independent ways: Rayleigh–Schrödinger
//! perturbation theory over the harmonic-oscillator basis
//! ([`oscillator`], [`perturbation`]) and direct numerical integration with
//! a Numerov shooting eigensolver ([`numerov`]).  [`spectrum`] composes the
//! pieces into total levels and samples the full 3D wavefunction.
//!
//! Working units are eV and nm throughout, with `2m/ħ² = 26.2468963087034
//! eV⁻¹·nm⁻²` for the electron and `e²/4πε₀ = 1.44 eV·nm`.

pub mod corral;
pub mod numerov;
pub mod oscillator;
pub mod perturbation;
pub mod potential;
pub mod spectrum;

mod quad;

pub use corral::{bessel_j, bessel_zero, corral_mode, CorralMode, MAX_ORDER};
pub use numerov::{
    g_function, normalize, numerov_sweep, solve_eigenvalue, AxialPotential, Direction,
    GridFunction, Protocol, ShootingProblem,
};
pub use oscillator::{build_ladder_matrices, hermite, ho_eigenfunction, LadderMatrix};
pub use perturbation::{
    corrected_norm, corrected_wavefunction, first_order_energy, perturbed_level,
    second_order_energy, second_order_energy_extended, PerturbedLevel, MAX_LEVEL,
};
pub use potential::{
    ring_potential, taylor_coefficients, OscillatorExpansion, RingConfig, COULOMB_EV_NM,
    TWO_M_OVER_HBAR_SQ,
};
pub use spectrum::{sample_full_wavefunction, total_level, AxialMethod, CompositeState};

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A physical or numerical configuration that cannot be solved
    /// (non-binding charge, non-positive radius, malformed grid, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// An argument outside the supported domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A shooting bracket whose mismatch function never changes sign.
    #[error("bracket failure: {0}")]
    BracketFailure(String),
    /// The bracketed state does not have the requested number of nodes.
    #[error("node count mismatch: expected {expected}, found {found}")]
    NodeCountMismatch { expected: usize, found: usize },
    /// An iterative search exhausted its budget without meeting tolerance.
    #[error("no convergence within {iterations} iterations")]
    NonConvergence { iterations: usize },
    /// A grid function with vanishing norm cannot be normalized.
    #[error("cannot normalize a grid function with zero norm")]
    ZeroNorm,
}

pub type Result<T> = std::result::Result<T, Error>;
