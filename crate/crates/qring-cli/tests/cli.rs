//! Black-box tests of the `qring` binary: table contents against frozen
//! reference values, CSV round-trips, parity and overlay properties of the
//! exported eigenfunctions, configuration precedence, determinism, and exit
//! codes.

use std::process::Command;

/// Runs the binary and returns (stdout, stderr, exit code).
fn qring(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_qring"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
        output.status.code().expect("exit code"),
    )
}

/// Parses a whitespace-padded table (or a CSV) into rows of numbers,
/// skipping the header line.
fn parse_rows(text: &str, separator: Option<char>) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let cells: Vec<&str> = match separator {
                Some(c) => line.split(c).collect(),
                None => line.split_whitespace().collect(),
            };
            cells
                .iter()
                .map(|cell| cell.trim().parse::<f64>().expect("numeric cell"))
                .collect()
        })
        .collect()
}

/// Axial energies of the reference ring (perturbative expansion), frozen.
const PERTURBATIVE: [f64; 5] = [
    -14.34783771927032,
    -14.24393872692396,
    -14.140887819809521,
    -14.038678891938854,
    -13.937305837323809,
];

/// Axial energies of the reference ring (fixed-boundary shooting), frozen.
const FIXED_WINDOW: [f64; 5] = [
    -14.3478378033,
    -14.2439392468,
    -14.1408889969,
    -14.0386773561,
    -13.9372838224,
];

#[test]
fn spectrum_table_matches_frozen_energies() {
    let (stdout, _, code) = qring(&["spectrum", "--method", "both", "--paper-protocol"]);
    assert_eq!(code, 0);
    let rows = parse_rows(&stdout, None);
    assert_eq!(rows.len(), 5);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0] as usize, n);
        assert!(
            (row[1] - PERTURBATIVE[n]).abs() < 1e-8,
            "perturbative n = {n}: {}",
            row[1]
        );
        assert!(
            (row[2] - FIXED_WINDOW[n]).abs() < 1e-8,
            "shooting n = {n}: {}",
            row[2]
        );
        // Each cell is independently rounded to ten significant digits,
        // so the difference column agrees with the energy columns only to
        // their rounding floor (~1e-8 at these magnitudes).
        assert!(
            (row[3] - (row[2] - row[1])).abs() < 3e-8,
            "difference column must be E_numerov - E_perturbation"
        );
    }
}

#[test]
fn spectrum_csv_round_trips_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.csv");
    let (stdout, _, code) = qring(&[
        "spectrum",
        "--method",
        "both",
        "--paper-protocol",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("n,E_perturbation_eV,E_numerov_eV,difference_eV\n"));
    assert!(!csv.contains('\r'), "CSV must use LF line endings");
    let table_rows = parse_rows(&stdout, None);
    let csv_rows = parse_rows(&csv, Some(','));
    assert_eq!(
        table_rows, csv_rows,
        "CSV and table must carry identical values"
    );
    // Ten significant digits: re-parsing reproduces the frozen in-memory
    // values to 1e-9 relative.
    for (n, row) in csv_rows.iter().enumerate() {
        let rel = ((row[1] - PERTURBATIVE[n]) / PERTURBATIVE[n]).abs();
        assert!(rel < 1e-9, "round-trip error {rel} at n = {n}");
    }
}

#[test]
fn even_wavefunction_is_symmetric() {
    let (stdout, _, code) = qring(&["wavefunction", "--n", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("z_nm,Z\n"));
    let rows = parse_rows(&stdout, Some(','));
    assert_eq!(rows.len(), 63, "window +-3.1 nm at step 0.1 nm");
    for k in 0..rows.len() {
        let mirrored = rows[rows.len() - 1 - k][1];
        assert!(
            (rows[k][1] - mirrored).abs() < 1e-6,
            "Z_0({}) vs Z_0({})",
            rows[k][0],
            rows[rows.len() - 1 - k][0]
        );
    }
}

#[test]
fn odd_wavefunction_vanishes_at_the_origin() {
    let (stdout, _, code) = qring(&["wavefunction", "--n", "1"]);
    assert_eq!(code, 0);
    let rows = parse_rows(&stdout, Some(','));
    let at_origin = rows
        .iter()
        .find(|row| row[0].abs() < 1e-12)
        .expect("grid contains z = 0");
    assert!(at_origin[1].abs() < 1e-6, "Z_1(0) = {}", at_origin[1]);
}

#[test]
fn shooting_and_perturbative_ground_states_overlay() {
    let (numerov, _, code_a) = qring(&[
        "wavefunction",
        "--n",
        "0",
        "--method",
        "numerov",
        "--paper-protocol",
    ]);
    let (perturbative, _, code_b) =
        qring(&["wavefunction", "--n", "0", "--method", "perturbation"]);
    assert_eq!((code_a, code_b), (0, 0));
    let a = parse_rows(&numerov, Some(','));
    let b = parse_rows(&perturbative, Some(','));
    assert_eq!(a.len(), b.len(), "both methods sample the same grid");
    let peak = a.iter().map(|row| row[1].abs()).fold(0.0, f64::max);
    for (row_a, row_b) in a.iter().zip(&b) {
        assert!((row_a[0] - row_b[0]).abs() < 1e-12);
        assert!(
            (row_a[1] - row_b[1]).abs() < 0.02 * peak,
            "curves diverge at z = {}: {} vs {}",
            row_a[0],
            row_a[1],
            row_b[1]
        );
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["spectrum", "--method", "both", "--levels", "3"];
    let (first, _, _) = qring(&args);
    let (second, _, _) = qring(&args);
    assert_eq!(first, second);
}

#[test]
fn corral_table_lists_published_zeros_and_levels() {
    let (stdout, _, code) = qring(&["corral", "--nu", "0", "--count", "4"]);
    assert_eq!(code, 0);
    let rows = parse_rows(&stdout, None);
    let published_zeros = [2.40483, 5.52008, 8.65373, 11.79153];
    for (row, zero) in rows.iter().zip(&published_zeros) {
        assert!((row[1] - zero).abs() < 1e-5, "zero {} vs {zero}", row[1]);
        // Dimensionless column is the squared zero.
        assert!(
            ((row[4] - row[1] * row[1]) / row[4]).abs() < 1e-8,
            "2mER^2/hbar^2 = {} vs j^2 = {}",
            row[4],
            row[1] * row[1]
        );
    }
    assert!(
        (rows[0][3] - 0.0022033843).abs() < 1e-8,
        "E_10 = {}",
        rows[0][3]
    );
}

#[test]
fn harmonic_test_reproduces_the_analytic_level() {
    let (stdout, _, code) = qring(&[
        "spectrum",
        "--levels",
        "1",
        "--harmonic-test",
        "--step",
        "0.01",
    ]);
    assert_eq!(code, 0);
    let rows = parse_rows(&stdout, None);
    let exact = 0.5 * 0.1047507801455669 - 14.4;
    assert!(
        (rows[0][1] - exact).abs() < 1e-8,
        "analytic: {}",
        rows[0][1]
    );
    assert!(
        (rows[0][2] - exact).abs() < 1e-8,
        "shooting: {}",
        rows[0][2]
    );
}

#[test]
fn config_file_sits_between_flags_and_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.conf");
    std::fs::write(&path, "# test ring\ncharge = 50\nradius = 5\n").unwrap();
    let (from_file, _, code) = qring(&[
        "spectrum",
        "--method",
        "perturbation",
        "--levels",
        "2",
        "--config",
        path.to_str().unwrap(),
        "--radius",
        "10",
    ]);
    assert_eq!(code, 0);
    // The flag overrides the file's radius; the file's charge overrides
    // the default.
    let (from_flags, _, _) = qring(&[
        "spectrum",
        "--method",
        "perturbation",
        "--levels",
        "2",
        "--charge",
        "50",
        "--radius",
        "10",
    ]);
    assert_eq!(from_file, from_flags);
    let (from_defaults, _, _) = qring(&["spectrum", "--method", "perturbation", "--levels", "2"]);
    assert_ne!(
        from_file, from_defaults,
        "the file's charge must take effect"
    );
}

#[test]
fn invalid_arguments_exit_with_code_2() {
    let cases: [&[&str]; 6] = [
        &["spectrum", "--bogus"],
        &["spectrum", "--charge", "-5"],
        &["spectrum", "--levels", "0"],
        &["wavefunction", "--n", "0", "--method", "both"],
        &["wavefunction", "--n", "7", "--levels", "5"],
        &["corral", "--count", "0"],
    ];
    for args in cases {
        let (_, stderr, code) = qring(args);
        assert_eq!(code, 2, "args {args:?} gave stderr {stderr}");
    }
}

#[test]
fn solver_failures_exit_with_code_3_and_name_the_level() {
    // A feeble ring's weakly bound states do not fit the default window;
    // the solve must fail loudly rather than return a wrong level.
    let (_, stderr, code) = qring(&[
        "spectrum", "--charge", "0.1", "--levels", "1", "--method", "numerov",
    ]);
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(
        stderr.contains("level n = 0"),
        "diagnostic must name the failing level: {stderr}"
    );
}
