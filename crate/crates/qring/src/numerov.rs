//! Fourth-order Numerov integration of the axial Schrödinger equation and a
//! shooting eigensolver.
//!
//! In eV–nm units the axial equation reads `Y''(x) = -g(x) Y(x)` with
//!
//! ```text
//! g(x) = alpha / sqrt(1 + x^2/R^2) + beta E,
//! alpha = (2m/hbar^2) V0,    beta = 2m/hbar^2,
//! ```
//!
//! discretized on a uniform grid `x_k = x_0 + k h` by the Numerov
//! three-term recurrence (local error O(h⁶), global O(h⁴)):
//!
//! ```text
//! Y_{k+1} = [ 2 Y_k (1 - 5 c g_k) - Y_{k-1} (1 + c g_{k-1}) ] / (1 + c g_{k+1}),
//! c = h^2 / 12.
//! ```
//!
//! Eigenvalues are located by bisection inside an energy bracket.  Two
//! search protocols are provided:
//!
//! * **Bidirectional** (default): integrate from both edges with tiny
//!   tail seeds, narrow the bracket by counting sign changes of the forward
//!   solution (one new node appears as each eigenvalue is crossed), and
//!   bisect on the discrete Wronskian of the two branches at the central
//!   grid point, where the working variable is `Ŷ_k = (1 + c g_k) Y_k`.
//!   The converged branches are glued and normalized.
//! * **FixedBoundary** (compatibility): forward integration only on the
//!   legacy window `[-3.1, 3.1]`, `h = 0.1`, with prescribed boundary
//!   values, bisecting on the miss at the right endpoint.

use crate::perturbation::{corrected_wavefunction, PerturbedLevel};
use crate::potential::{RingConfig, TWO_M_OVER_HBAR_SQ};
use crate::{Error, Result};

/// Sweep orientation for [`numerov_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Integrate from the left edge (seeds Y₀, Y₁) rightward.
    Forward,
    /// Integrate from the right edge (seeds Y_N, Y_{N−1}) leftward.
    Backward,
}

/// Which axial potential energy enters g(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxialPotential {
    /// Charged-ring well −(α/β)/√(1 + x²/R²).
    Ring,
    /// Harmonic well −α/β + ¼β(ħω)²x², the quadratic truncation of the
    /// ring well (same depth, same curvature).
    Harmonic { hbar_omega: f64 },
}

/// Eigenvalue search protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    /// Two-sided integration matched at the center (robust default).
    Bidirectional,
    /// One-sided integration against fixed boundary values on the legacy
    /// ±3.1 nm window.
    FixedBoundary,
}

/// Energy half-width of the default search bracket around a seed.
const BRACKET_HALF_WIDTH: f64 = 0.025;
/// Bisection stops when the bracket is narrower than this (eV).
const ENERGY_TOL: f64 = 1e-10;
/// Iteration budget of each bisection stage.
const MAX_ITER: usize = 200;
/// Tail seed magnitude for bidirectional sweeps.
const TAIL_SEED: f64 = 1e-12;
/// Decay depth (in e-folds of the WKB tail) required of an auto-sized
/// integration domain.
const TAIL_EFOLDS: f64 = 26.0;

/// A real function sampled on the uniform grid `x_k = x0 + k h`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    /// Left edge of the grid in nm.
    pub x0: f64,
    /// Grid step in nm.
    pub h: f64,
    /// Samples Y₀ … Y_N.
    pub values: Vec<f64>,
    /// Whether the samples carry unit trapezoid norm.
    pub normalized: bool,
}

impl GridFunction {
    /// Number of samples.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Whether the grid holds no samples.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Abscissa of sample `k`.
    pub fn x_at(&self, k: usize) -> f64 {
        self.x0 + k as f64 * self.h
    }

    /// Right edge of the grid.
    pub fn x_end(&self) -> f64 {
        self.x_at(self.values.len().saturating_sub(1))
    }

    /// Counts interior sign changes, ignoring samples below 1e-12 of the
    /// peak magnitude (numerical zeros in the far tails).
    pub fn node_count(&self) -> usize {
        let peak = self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if peak == 0.0 {
            return 0;
        }
        let floor = 1e-12 * peak;
        let mut count = 0;
        let mut last = 0.0_f64;
        for &v in &self.values {
            if v.abs() <= floor {
                continue;
            }
            if last != 0.0 && (v > 0.0) != (last > 0.0) {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// Linear interpolation between samples; zero outside the grid window.
    pub fn value_at(&self, x: f64) -> f64 {
        if self.values.is_empty() || x < self.x0 || x > self.x_end() {
            return 0.0;
        }
        let t = (x - self.x0) / self.h;
        let i = (t.floor() as usize).min(self.values.len().saturating_sub(2));
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }
}

/// A fully specified shooting eigenproblem: potential, grid, boundary
/// values, and the energy bracket to search.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingProblem {
    /// Well strength α = (2m/ħ²)V₀ in nm⁻².
    pub alpha: f64,
    /// Mass constant β = 2m/ħ² in eV⁻¹·nm⁻².
    pub beta: f64,
    /// Ring radius in nm.
    pub radius: f64,
    /// Shape of the axial potential.
    pub potential: AxialPotential,
    /// Left edge of the grid in nm.
    pub x0: f64,
    /// Grid step in nm.
    pub h: f64,
    /// Boundary samples (Y₀, Y₁, Y_{N−1}, Y_N).
    pub boundary: (f64, f64, f64, f64),
    /// Energy search bracket [E_lo, E_hi] in eV; must straddle exactly one
    /// eigenvalue.
    pub energy_bracket: (f64, f64),
    /// Eigenvalue search protocol.
    pub protocol: Protocol,
    /// β·V(x_k) tabulated on the grid.
    beta_v: Vec<f64>,
}

impl ShootingProblem {
    /// Builds a problem from explicit grid and boundary data; `intervals`
    /// is the number of grid steps N (N+1 samples).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha: f64,
        beta: f64,
        radius: f64,
        potential: AxialPotential,
        x0: f64,
        h: f64,
        intervals: usize,
        boundary: (f64, f64, f64, f64),
        energy_bracket: (f64, f64),
        protocol: Protocol,
    ) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "grid step must be positive, got {h}"
            )));
        }
        if intervals < 2 {
            return Err(Error::InvalidConfig(format!(
                "grid needs at least 3 samples, got {} intervals",
                intervals
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "radius must be positive, got {radius}"
            )));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "mass constant must be positive, got {beta}"
            )));
        }
        if !(energy_bracket.0.is_finite()
            && energy_bracket.1.is_finite()
            && energy_bracket.0 < energy_bracket.1)
        {
            return Err(Error::InvalidConfig(format!(
                "energy bracket must be a finite nonempty interval, got [{}, {}]",
                energy_bracket.0, energy_bracket.1
            )));
        }
        let beta_v = (0..=intervals)
            .map(|k| beta_potential(&potential, alpha, beta, radius, x0 + k as f64 * h))
            .collect();
        Ok(ShootingProblem {
            alpha,
            beta,
            radius,
            potential,
            x0,
            h,
            boundary,
            energy_bracket,
            protocol,
            beta_v,
        })
    }

    /// Two-sided problem for the ring well with an automatically sized
    /// symmetric domain: the grid extends far enough past the classical
    /// turning point that the tail decays by ~26 e-folds.
    pub fn bidirectional(config: &RingConfig, seed_energy: f64, h: f64) -> Result<Self> {
        let half_width = auto_half_width(
            &AxialPotential::Ring,
            TWO_M_OVER_HBAR_SQ * config.v0,
            TWO_M_OVER_HBAR_SQ,
            config.radius,
            seed_energy + BRACKET_HALF_WIDTH,
            h,
        )?;
        Self::bidirectional_window(config, seed_energy, h, half_width)
    }

    /// Two-sided problem for the ring well on the explicit symmetric window
    /// [−half_width, half_width] (rounded out to a whole number of steps).
    pub fn bidirectional_window(
        config: &RingConfig,
        seed_energy: f64,
        h: f64,
        half_width: f64,
    ) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "domain half-width must be positive, got {half_width}"
            )));
        }
        let alpha = TWO_M_OVER_HBAR_SQ * config.v0;
        let beta = TWO_M_OVER_HBAR_SQ;
        let (x0, intervals) = symmetric_grid(half_width, h);
        let seeds = tail_seeds(
            &AxialPotential::Ring,
            alpha,
            beta,
            config.radius,
            x0,
            h,
            seed_energy,
        );
        Self::new(
            alpha,
            beta,
            config.radius,
            AxialPotential::Ring,
            x0,
            h,
            intervals,
            seeds,
            (
                seed_energy - BRACKET_HALF_WIDTH,
                seed_energy + BRACKET_HALF_WIDTH,
            ),
            Protocol::Bidirectional,
        )
    }

    /// Two-sided problem for the harmonic well of depth `v0` and quantum
    /// `hbar_omega`, with an automatically sized domain.
    pub fn harmonic(v0: f64, hbar_omega: f64, seed_energy: f64, h: f64) -> Result<Self> {
        let beta = TWO_M_OVER_HBAR_SQ;
        let alpha = beta * v0;
        let potential = AxialPotential::Harmonic { hbar_omega };
        // The radius never enters the harmonic potential; any positive
        // value satisfies the constructor.
        let radius = 1.0;
        let half_width = auto_half_width(
            &potential,
            alpha,
            beta,
            radius,
            seed_energy + BRACKET_HALF_WIDTH,
            h,
        )?;
        let (x0, intervals) = symmetric_grid(half_width, h);
        let seeds = tail_seeds(&potential, alpha, beta, radius, x0, h, seed_energy);
        Self::new(
            alpha,
            beta,
            radius,
            potential,
            x0,
            h,
            intervals,
            seeds,
            (
                seed_energy - BRACKET_HALF_WIDTH,
                seed_energy + BRACKET_HALF_WIDTH,
            ),
            Protocol::Bidirectional,
        )
    }

    /// Legacy fixed-boundary problem: window ±3.1 nm, step 0.1 nm, boundary
    /// values taken from the perturbative state Z_n (for the reference ring
    /// and n = 0, the historical rounded values 0.001259 / 0.001888).
    pub fn fixed_boundary(config: &RingConfig, n: u32, seed_energy: f64) -> Result<Self> {
        let h = 0.1;
        let x0 = -3.1;
        let intervals = 62;
        let (y0, y1) = if n == 0 && config.charge_q == 100.0 && config.radius == 10.0 {
            (0.001259, 0.001888)
        } else {
            (
                corrected_wavefunction(n, config, x0)?,
                corrected_wavefunction(n, config, x0 + h)?,
            )
        };
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        Self::new(
            TWO_M_OVER_HBAR_SQ * config.v0,
            TWO_M_OVER_HBAR_SQ,
            config.radius,
            AxialPotential::Ring,
            x0,
            h,
            intervals,
            (y0, y1, sign * y1, sign * y0),
            (
                seed_energy - BRACKET_HALF_WIDTH,
                seed_energy + BRACKET_HALF_WIDTH,
            ),
            Protocol::FixedBoundary,
        )
    }

    /// Number of grid samples (N + 1).
    pub fn samples(&self) -> usize {
        self.beta_v.len()
    }

    /// Integration domain [x₀, x_N].
    pub fn domain(&self) -> (f64, f64) {
        (self.x0, self.x0 + (self.samples() - 1) as f64 * self.h)
    }
}

/// Coefficient g(x) = β(E − V(x)) of Y'' = −gY; for the ring well this is
/// α/√(1 + x²/R²) + βE.
pub fn g_function(problem: &ShootingProblem, x: f64, e: f64) -> f64 {
    problem.beta * e
        - beta_potential(
            &problem.potential,
            problem.alpha,
            problem.beta,
            problem.radius,
            x,
        )
}

/// β·V(x) for the supported potential shapes.
fn beta_potential(potential: &AxialPotential, alpha: f64, beta: f64, radius: f64, x: f64) -> f64 {
    match *potential {
        AxialPotential::Ring => {
            let u = x / radius;
            -alpha / (1.0 + u * u).sqrt()
        }
        AxialPotential::Harmonic { hbar_omega } => {
            let q = 0.5 * beta * hbar_omega * x;
            -alpha + q * q
        }
    }
}

/// Symmetric grid of even step count covering at least ±half_width.
fn symmetric_grid(half_width: f64, h: f64) -> (f64, usize) {
    let mut intervals = (2.0 * half_width / h).ceil() as usize;
    intervals = intervals.max(2);
    if intervals % 2 == 1 {
        intervals += 1;
    }
    (-(intervals as f64 / 2.0) * h, intervals)
}

/// Symmetric tiny boundary seeds growing inward at the local WKB rate.
fn tail_seeds(
    potential: &AxialPotential,
    alpha: f64,
    beta: f64,
    radius: f64,
    x0: f64,
    h: f64,
    energy: f64,
) -> (f64, f64, f64, f64) {
    let excess = beta_potential(potential, alpha, beta, radius, x0) - beta * energy;
    let kappa = excess.max(1e-12).sqrt();
    let inner = TAIL_SEED * (kappa * h).exp();
    (TAIL_SEED, inner, inner, TAIL_SEED)
}

/// Walks outward from the origin until the WKB tail beyond the classical
/// turning point of `e_hi` has accumulated ~26 e-folds of decay.
fn auto_half_width(
    potential: &AxialPotential,
    alpha: f64,
    beta: f64,
    radius: f64,
    e_hi: f64,
    h: f64,
) -> Result<f64> {
    let beta_e = beta * e_hi;
    let mut efolds = 0.0;
    let mut x = 0.0;
    for _ in 0..20_000_000usize {
        x += h;
        let excess = beta_potential(potential, alpha, beta, radius, x) - beta_e;
        if excess > 0.0 {
            efolds += excess.sqrt() * h;
            if efolds >= TAIL_EFOLDS {
                return Ok(x);
            }
        }
    }
    Err(Error::InvalidConfig(format!(
        "cannot close the integration domain: the state near E = {e_hi} eV is too weakly bound"
    )))
}

/// Integrates Y'' = −g(x)Y across the grid at trial energy `e`, seeding
/// from the stored boundary pair on the chosen edge.  The solution is
/// rescaled whenever it exceeds 1e250 (the overall scale is irrelevant
/// before normalization).
pub fn numerov_sweep(problem: &ShootingProblem, e: f64, direction: Direction) -> GridFunction {
    let n = problem.samples() - 1;
    let c = problem.h * problem.h / 12.0;
    let g = |k: usize| problem.beta * e - problem.beta_v[k];
    let mut values = vec![0.0; n + 1];
    match direction {
        Direction::Forward => {
            values[0] = problem.boundary.0;
            values[1] = problem.boundary.1;
            for k in 1..n {
                values[k + 1] = (2.0 * values[k] * (1.0 - 5.0 * c * g(k))
                    - values[k - 1] * (1.0 + c * g(k - 1)))
                    / (1.0 + c * g(k + 1));
                if values[k + 1].abs() > 1e250 {
                    for v in values[..=k + 1].iter_mut() {
                        *v /= 1e250;
                    }
                }
            }
        }
        Direction::Backward => {
            values[n] = problem.boundary.3;
            values[n - 1] = problem.boundary.2;
            for k in (1..n).rev() {
                values[k - 1] = (2.0 * values[k] * (1.0 - 5.0 * c * g(k))
                    - values[k + 1] * (1.0 + c * g(k + 1)))
                    / (1.0 + c * g(k - 1));
                if values[k - 1].abs() > 1e250 {
                    for v in values[k - 1..].iter_mut() {
                        *v /= 1e250;
                    }
                }
            }
        }
    }
    GridFunction {
        x0: problem.x0,
        h: problem.h,
        values,
        normalized: false,
    }
}

/// Refines the energy bracket of `problem` to an eigenvalue and returns the
/// energy, the normalized eigenfunction, and its node count (which must
/// equal `seed.n`).
pub fn solve_eigenvalue(
    problem: &ShootingProblem,
    seed: &PerturbedLevel,
) -> Result<(f64, GridFunction, usize)> {
    let energy = match problem.protocol {
        Protocol::FixedBoundary => solve_fixed_boundary(problem)?,
        Protocol::Bidirectional => solve_bidirectional(problem, seed.n as usize)?,
    };
    let grid = match problem.protocol {
        Protocol::FixedBoundary => numerov_sweep(problem, energy, Direction::Forward),
        Protocol::Bidirectional => glue_branches(problem, energy),
    };
    let grid = normalize(&grid)?;
    let nodes = grid.node_count();
    if nodes != seed.n as usize {
        return Err(Error::NodeCountMismatch {
            expected: seed.n as usize,
            found: nodes,
        });
    }
    Ok((energy, grid, nodes))
}

/// Bisection on the right-endpoint miss of the forward sweep.
fn solve_fixed_boundary(problem: &ShootingProblem) -> Result<f64> {
    let n = problem.samples() - 1;
    let target = problem.boundary.3;
    let miss = |e: f64| numerov_sweep(problem, e, Direction::Forward).values[n] - target;
    let (mut lo, mut hi) = problem.energy_bracket;
    let mut f_lo = miss(lo);
    let f_hi = miss(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo * f_hi > 0.0 {
        return Err(Error::BracketFailure(format!(
            "endpoint miss has the same sign ({f_lo:+.3e} and {f_hi:+.3e}) at both bracket edges [{lo}, {hi}]"
        )));
    }
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo < ENERGY_TOL {
            return Ok(mid);
        }
        let f_mid = miss(mid);
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
    Err(Error::NonConvergence {
        iterations: MAX_ITER,
    })
}

/// Sign changes of the raw forward solution, tail divergence included; by
/// Sturm oscillation this counts the eigenvalues below the trial energy.
fn raw_sign_changes(problem: &ShootingProblem, e: f64) -> usize {
    let values = numerov_sweep(problem, e, Direction::Forward).values;
    values
        .windows(2)
        .filter(|pair| pair[0] * pair[1] < 0.0)
        .count()
}

/// Two-sided eigenvalue search: narrow the bracket until the forward
/// solution gains its (n+1)-th sign change inside it, then bisect on the
/// central Wronskian of the two branches.
fn solve_bidirectional(problem: &ShootingProblem, target_nodes: usize) -> Result<f64> {
    let (mut lo, mut hi) = problem.energy_bracket;
    let mut nodes_lo = raw_sign_changes(problem, lo);
    let mut nodes_hi = raw_sign_changes(problem, hi);
    if nodes_lo > target_nodes || nodes_hi < target_nodes + 1 {
        return Err(Error::BracketFailure(format!(
            "bracket [{lo}, {hi}] eV does not straddle eigenvalue {target_nodes}: \
             the sweeps show {nodes_lo} and {nodes_hi} states below the edges"
        )));
    }
    let mut iterations = 0;
    while nodes_lo != target_nodes || nodes_hi != target_nodes + 1 {
        iterations += 1;
        if iterations > 80 {
            return Err(Error::NonConvergence { iterations: 80 });
        }
        let mid = 0.5 * (lo + hi);
        let nodes_mid = raw_sign_changes(problem, mid);
        if nodes_mid <= target_nodes {
            lo = mid;
            nodes_lo = nodes_mid;
        } else {
            hi = mid;
            nodes_hi = nodes_mid;
        }
    }

    let mut c_lo = central_wronskian(problem, lo);
    let c_hi = central_wronskian(problem, hi);
    if c_lo == 0.0 {
        return Ok(lo);
    }
    if c_hi == 0.0 {
        return Ok(hi);
    }
    if c_lo * c_hi > 0.0 {
        return Err(Error::BracketFailure(format!(
            "matching determinant keeps its sign across [{lo}, {hi}] eV"
        )));
    }
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo < ENERGY_TOL {
            return Ok(mid);
        }
        let c_mid = central_wronskian(problem, mid);
        if c_mid == 0.0 {
            return Ok(mid);
        }
        if c_lo * c_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            c_lo = c_mid;
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITER,
    })
}

/// Discrete Wronskian of the forward and backward branches across the
/// central grid pair (m, m+1), in the Numerov-conserved variable
/// Ŷ = (1 + c g)Y.  It vanishes exactly when the branches are multiples of
/// one another, i.e. at an eigenvalue.
fn central_wronskian(problem: &ShootingProblem, e: f64) -> f64 {
    let forward = numerov_sweep(problem, e, Direction::Forward).values;
    let backward = numerov_sweep(problem, e, Direction::Backward).values;
    let m = (problem.samples() - 1) / 2;
    let c = problem.h * problem.h / 12.0;
    let hat =
        |values: &[f64], k: usize| (1.0 + c * (problem.beta * e - problem.beta_v[k])) * values[k];
    let f_m = hat(&forward, m);
    let f_m1 = hat(&forward, m + 1);
    let b_m = hat(&backward, m);
    let b_m1 = hat(&backward, m + 1);
    // Only the sign matters to the bisection; rescale each branch by its
    // larger entry so extreme dynamic ranges cannot overflow the products.
    let sf = f_m.abs().max(f_m1.abs()).max(f64::MIN_POSITIVE);
    let sb = b_m.abs().max(b_m1.abs()).max(f64::MIN_POSITIVE);
    (f_m / sf) * (b_m1 / sb) - (f_m1 / sf) * (b_m / sb)
}

/// Joins the two branches at the matching point into one grid function.
fn glue_branches(problem: &ShootingProblem, e: f64) -> GridFunction {
    let forward = numerov_sweep(problem, e, Direction::Forward);
    let backward = numerov_sweep(problem, e, Direction::Backward);
    let m = (problem.samples() - 1) / 2;
    // Scale the backward branch onto the forward one using the
    // better-conditioned of the two shared samples.
    let scale = if backward.values[m].abs() >= backward.values[m + 1].abs() {
        forward.values[m] / backward.values[m]
    } else {
        forward.values[m + 1] / backward.values[m + 1]
    };
    let mut values = forward.values[..=m].to_vec();
    values.extend(backward.values[m + 1..].iter().map(|v| scale * v));
    GridFunction {
        x0: problem.x0,
        h: problem.h,
        values,
        normalized: false,
    }
}

/// Rescales a grid function to unit trapezoid norm and fixes the sign so
/// the function is positive at the right tail.
pub fn normalize(f: &GridFunction) -> Result<GridFunction> {
    let peak = f.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if peak == 0.0 || !peak.is_finite() {
        return Err(Error::ZeroNorm);
    }
    // Divide out the peak first so squaring cannot overflow.
    let mut values: Vec<f64> = f.values.iter().map(|v| v / peak).collect();
    let mut sum_sq = values.iter().map(|v| v * v).sum::<f64>();
    sum_sq -= 0.5 * (values[0] * values[0] + values[values.len() - 1] * values[values.len() - 1]);
    let norm = (sum_sq * f.h).sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::ZeroNorm);
    }
    for v in values.iter_mut() {
        *v /= norm;
    }
    let tail_floor = 1e-6 / norm;
    if let Some(&edge) = values.iter().rev().find(|v| v.abs() >= tail_floor) {
        if edge < 0.0 {
            for v in values.iter_mut() {
                *v = -*v;
            }
        }
    }
    Ok(GridFunction {
        x0: f.x0,
        h: f.h,
        values,
        normalized: true,
    })
}
