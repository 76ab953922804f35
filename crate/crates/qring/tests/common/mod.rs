//! Independent numerical oracles shared by the integration tests: a dense
//! finite-difference eigensolver and a brute-force Bessel series.  Both are
//! deliberately built from first principles, with no code shared with the
//! library under test.

/// Mass constant 2m/ħ² in eV⁻¹·nm⁻², duplicated here so the oracle does
/// not lean on the library.
pub const BETA: f64 = 26.2468963087034;

/// Lowest `count` eigenvalues of −(ħ²/2m)ψ'' + V(x)ψ = Eψ on a dense
/// uniform grid with hard walls at `x_min`/`x_max`, via the three-point
/// Laplacian and Sturm-sequence bisection.
pub fn fd_eigenvalues<F: Fn(f64) -> f64>(
    count: usize,
    interior_points: usize,
    x_min: f64,
    x_max: f64,
    potential: F,
) -> Vec<f64> {
    let h = (x_max - x_min) / (interior_points + 1) as f64;
    let t = 1.0 / (BETA * h * h);
    let diag: Vec<f64> = (1..=interior_points)
        .map(|i| 2.0 * t + potential(x_min + i as f64 * h))
        .collect();
    let off_sq = t * t;

    // Number of eigenvalues below `e`, from the sign count of the LDL^T
    // pivots of (H - e I).
    let negatives = |e: f64| -> usize {
        let mut count = 0;
        let mut pivot = diag[0] - e;
        if pivot < 0.0 {
            count += 1;
        }
        for &d in &diag[1..] {
            let denom = if pivot == 0.0 { 1e-300 } else { pivot };
            pivot = d - e - off_sq / denom;
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    };

    let floor = diag.iter().fold(f64::INFINITY, |m, &d| m.min(d - 2.0 * t)) - 1.0;
    (0..count)
        .map(|k| {
            let mut lo = floor;
            let mut hi = 0.0;
            for _ in 0..200 {
                if hi - lo < 1e-12 {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                if negatives(mid) <= k {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Plain 40-term ascending power series for J_nu, an independent check of
/// the library's evaluator at small argument.
pub fn bessel_series_40(nu: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for i in 1..=nu {
        term *= half / i as f64;
    }
    let mut sum = term;
    for m in 1..=40u32 {
        term *= -(half * half) / (m as f64 * (nu + m) as f64);
        sum += term;
    }
    sum
}

/// Composite trapezoid inner product of two equally sampled functions.
pub fn trapezoid_overlap(a: &[f64], b: &[f64], h: f64) -> f64 {
    assert_eq!(a.len(), b.len());
    let sum: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    (sum - 0.5 * (a[0] * b[0] + a[a.len() - 1] * b[b.len() - 1])) * h
}
