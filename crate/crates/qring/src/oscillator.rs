//! Harmonic-oscillator basis machinery: Hermite polynomials, normalized
//! eigenfunctions, and matrix elements of z⁴ and z⁶ built from ladder
//! operators.
//!
//! The unperturbed basis is
//!
//! ```text
//! psi_n(z) = (m omega / pi hbar)^{1/4} (2^n n!)^{-1/2} H_n(xi) e^{-xi^2/2},
//! xi = z sqrt(m omega / hbar),
//! ```
//!
//! and powers of the position operator are expressed through `a`, `a†`:
//!
//! ```text
//! z = sqrt(hbar/2m omega) (a + a†),
//! a|n> = sqrt(n)|n-1>,   a†|n> = sqrt(n+1)|n+1>,
//! ```
//!
//! so `<k|z^4|n>` and `<k|z^6|n>` are entries of the fourth and sixth powers
//! of the tridiagonal matrix representing `a + a†`, in units of
//! `(hbar/2m omega)^2` and `(hbar/2m omega)^3`.  Matrix powers are evaluated
//! in a basis padded past the requested block so the reported entries are
//! exact despite truncation.

use nalgebra::DMatrix;

use crate::potential::OscillatorExpansion;

/// Extra basis states kept beyond `n_max` so the z⁴/z⁶ entries of the
/// reported block are unaffected by truncation.
const PADDING: usize = 8;

/// Matrix elements of z⁴ and z⁶ in the number basis, dimensionless
/// (multiply by `length_sq()²` resp. `length_sq()³` to restore nm units).
#[derive(Debug, Clone, PartialEq)]
pub struct LadderMatrix {
    /// Basis truncation size (n_max + padding).
    pub dim: usize,
    /// ⟨k|z⁴|n⟩ in units (ħ/2mω)².
    pub z4: DMatrix<f64>,
    /// ⟨k|z⁶|n⟩ in units (ħ/2mω)³.
    pub z6: DMatrix<f64>,
}

/// Physicists' Hermite polynomial `H_n(xi)` via the three-term recurrence
/// `H_{n+1} = 2 xi H_n - 2 n H_{n-1}` (supported up to n = 60).
pub fn hermite(n: u32, xi: f64) -> f64 {
    debug_assert!(n <= 60, "Hermite order {n} beyond supported range");
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut here = 2.0 * xi;
    for k in 1..n {
        let next = 2.0 * xi * here - 2.0 * k as f64 * prev;
        prev = here;
        here = next;
    }
    here
}

/// Normalized harmonic-oscillator eigenfunction ψₙ(z) in nm^(−1/2).
pub fn ho_eigenfunction(n: u32, z: f64, expansion: &OscillatorExpansion) -> f64 {
    debug_assert!(n <= 60, "oscillator level {n} beyond supported range");
    let xi = expansion.xi_scale * z;
    // (2^n n!)^{-1/2}
    let mut norm_sq = 1.0;
    for k in 1..=n {
        norm_sq *= 2.0 * k as f64;
    }
    let prefactor = (expansion.xi_scale * expansion.xi_scale / std::f64::consts::PI).powf(0.25)
        / norm_sq.sqrt();
    prefactor * hermite(n, xi) * (-0.5 * xi * xi).exp()
}

/// Builds ⟨k|z⁴|n⟩ and ⟨k|z⁶|n⟩ as powers of the tridiagonal `a + a†`
/// matrix, on a basis of size `n_max + 8`; entries with row and column at
/// most `n_max` are exact.
pub fn build_ladder_matrices(n_max: usize) -> LadderMatrix {
    let dim = n_max + PADDING;
    let mut position = DMatrix::<f64>::zeros(dim, dim);
    for k in 0..dim - 1 {
        let v = ((k + 1) as f64).sqrt();
        position[(k, k + 1)] = v;
        position[(k + 1, k)] = v;
    }
    let squared = &position * &position;
    let z4 = &squared * &squared;
    let z6 = &squared * &z4;
    LadderMatrix { dim, z4, z6 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{taylor_coefficients, RingConfig};
    use crate::quad::simpson;

    fn expansion() -> OscillatorExpansion {
        taylor_coefficients(&RingConfig::new(100.0, 10.0).unwrap())
    }

    #[test]
    fn hermite_matches_closed_forms() {
        assert_eq!(hermite(0, 3.7), 1.0);
        assert_eq!(hermite(1, 0.5), 1.0);
        // H3 = 8 xi^3 - 12 xi at xi = 1.
        assert_eq!(hermite(3, 1.0), -4.0);
        // H5 = 32 xi^5 - 160 xi^3 + 120 xi at xi = 2.
        assert_eq!(hermite(5, 2.0), -16.0);
    }

    #[test]
    fn hermite_parity() {
        for n in 0..=10u32 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(hermite(n, -1.3), sign * hermite(n, 1.3));
        }
    }

    #[test]
    fn eigenfunctions_are_normalized() {
        let e = expansion();
        let sigma = 1.0 / e.xi_scale;
        for n in [0u32, 1, 2, 5] {
            let norm = simpson(
                |z| {
                    let psi = ho_eigenfunction(n, z, &e);
                    psi * psi
                },
                -8.0 * sigma,
                8.0 * sigma,
                4096,
            );
            assert!((norm - 1.0).abs() < 1e-8, "norm of psi_{n}: {norm}");
        }
    }

    #[test]
    fn eigenfunctions_are_orthogonal_and_parity_definite() {
        let e = expansion();
        let sigma = 1.0 / e.xi_scale;
        let overlap = simpson(
            |z| ho_eigenfunction(0, z, &e) * ho_eigenfunction(2, z, &e),
            -8.0 * sigma,
            8.0 * sigma,
            4096,
        );
        assert!(overlap.abs() < 1e-8);
        for n in 0..=5u32 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let left = ho_eigenfunction(n, -0.7, &e);
            let right = ho_eigenfunction(n, 0.7, &e);
            assert!((left - sign * right).abs() < 1e-14);
        }
    }

    #[test]
    fn eigenfunction_zero_counts() {
        let e = expansion();
        let sigma = 1.0 / e.xi_scale;
        for n in 0..=5u32 {
            let mut crossings = 0;
            let mut last = ho_eigenfunction(n, -6.0 * sigma, &e);
            for i in 1..=1200 {
                let z = -6.0 * sigma + i as f64 * 0.01 * sigma;
                let now = ho_eigenfunction(n, z, &e);
                if now == 0.0 {
                    // A sample landing exactly on a zero carries no sign.
                    continue;
                }
                if last * now < 0.0 {
                    crossings += 1;
                }
                last = now;
            }
            assert_eq!(crossings, n as usize, "psi_{n} zero count");
        }
    }

    #[test]
    fn displayed_matrix_elements() {
        let m = build_ladder_matrices(4);
        assert!((m.z4[(0, 0)] - 3.0).abs() < 1e-12);
        assert!((m.z4[(2, 0)] - 6.0 * 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((m.z4[(4, 0)] - 2.0 * 6.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn diagonal_laws() {
        let n_max = 12;
        let m = build_ladder_matrices(n_max);
        for n in 0..=n_max {
            let nf = n as f64;
            let want4 = 6.0 * nf * nf + 6.0 * nf + 3.0;
            let want6 = 20.0 * nf * nf * nf + 30.0 * nf * nf + 40.0 * nf + 15.0;
            assert!((m.z4[(n, n)] - want4).abs() < 1e-12 * want4.max(1.0));
            assert!((m.z6[(n, n)] - want6).abs() < 1e-12 * want6.max(1.0));
        }
    }

    #[test]
    fn off_diagonal_laws() {
        let n_max = 12;
        let m = build_ladder_matrices(n_max);
        for n in 0..=n_max {
            let nf = n as f64;
            let up2 = (4.0 * nf + 6.0) * ((nf + 1.0) * (nf + 2.0)).sqrt();
            assert!((m.z4[(n + 2, n)] - up2).abs() < 1e-12 * up2.max(1.0));
            if n >= 2 {
                let down2 = (4.0 * nf - 2.0) * (nf * (nf - 1.0)).sqrt();
                assert!((m.z4[(n - 2, n)] - down2).abs() < 1e-12 * down2.max(1.0));
            }
            let up4 = ((nf + 1.0) * (nf + 2.0) * (nf + 3.0) * (nf + 4.0)).sqrt();
            assert!((m.z4[(n + 4, n)] - up4).abs() < 1e-12 * up4.max(1.0));
        }
    }

    #[test]
    fn bandwidth_symmetry_and_parity() {
        let n_max = 8;
        let m = build_ladder_matrices(n_max);
        for k in 0..=n_max {
            for n in 0..=n_max {
                assert!((m.z4[(k, n)] - m.z4[(n, k)]).abs() < 1e-12);
                assert!((m.z6[(k, n)] - m.z6[(n, k)]).abs() < 1e-12);
                let gap = k.abs_diff(n);
                if gap > 4 {
                    assert_eq!(m.z4[(k, n)], 0.0);
                }
                if gap > 6 {
                    assert_eq!(m.z6[(k, n)], 0.0);
                }
                if gap % 2 == 1 {
                    assert_eq!(m.z4[(k, n)], 0.0);
                    assert_eq!(m.z6[(k, n)], 0.0);
                }
            }
        }
    }
}
