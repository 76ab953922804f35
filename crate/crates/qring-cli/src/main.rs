//! Command-line surface for the charged-ring spectrum library.
//!
//! Three subcommands cover the library's outputs:
//!
//! * `spectrum` — the lowest axial levels E_n, from the perturbative
//!   expansion, the shooting solver, or both side by side;
//! * `wavefunction` — one normalized axial eigenfunction Z_n(z) as CSV;
//! * `corral` — transverse levels E_pν of the hard-wall disc for one
//!   circulation number ν.
//!
//! All numbers are printed with ten significant digits (`{:.9e}`), dot
//! decimal, independent of locale; identical inputs produce byte-identical
//! output.  Exit codes: 0 on success, 2 for invalid arguments or
//! configuration, 3 when an eigenvalue solve fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qring::{
    corral_mode, corrected_norm, corrected_wavefunction, perturbed_level, solve_eigenvalue,
    taylor_coefficients, RingConfig, ShootingProblem, TWO_M_OVER_HBAR_SQ,
};

/// Highest axial level index the perturbative seeds support.
const MAX_LEVELS: usize = qring::MAX_LEVEL as usize + 1;

#[derive(Parser)]
#[command(
    name = "qring",
    version,
    about = "Bound states of an electron on the symmetry axis of a charged ring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lowest axial energy levels.
    Spectrum(SpectrumArgs),
    /// Export one normalized axial eigenfunction as CSV.
    Wavefunction(WavefunctionArgs),
    /// Print transverse disc levels for one circulation number.
    Corral(CorralArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Ring charge in units of the elementary charge.
    #[arg(long, allow_negative_numbers = true)]
    charge: Option<f64>,
    /// Ring radius in nm.
    #[arg(long)]
    radius: Option<f64>,
    /// Number of axial levels (at most 11).
    #[arg(long)]
    levels: Option<usize>,
    /// Axial solver to use.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Grid step in nm.
    #[arg(long)]
    step: Option<f64>,
    /// Half-width of the integration window in nm.
    #[arg(long)]
    half_width: Option<f64>,
    /// Use the legacy fixed-boundary protocol: step 0.1 nm, window
    /// ±3.1 nm, historical boundary samples (overrides --step and
    /// --half-width).
    #[arg(long)]
    paper_protocol: bool,
    /// Write CSV to this path ("-" for standard output).
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value configuration file; flags take precedence over it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Replace the ring well by its harmonic approximation (an analytic
    /// cross-check: levels must come out at hw(n + 1/2) - V0).
    #[arg(long)]
    harmonic_test: bool,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Level index n of the eigenfunction to export.
    #[arg(long, default_value_t = 0)]
    n: u32,
}

#[derive(Args)]
struct CorralArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Circulation (azimuthal) quantum number ν.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    nu: i32,
    /// Number of radial modes p to print.
    #[arg(long, default_value_t = 4)]
    count: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Method {
    Perturbation,
    Numerov,
    Both,
}

/// Fully resolved run parameters: flags over config file over defaults.
#[derive(Debug, Clone, PartialEq)]
struct RunConfig {
    charge_q: f64,
    radius_nm: f64,
    levels: usize,
    method: Method,
    grid_h: f64,
    half_width: f64,
    paper_protocol: bool,
    out: Option<PathBuf>,
}

/// Optional values read from a key=value configuration file.
#[derive(Debug, Default, PartialEq)]
struct FileConfig {
    charge: Option<f64>,
    radius: Option<f64>,
    levels: Option<usize>,
    method: Option<Method>,
    step: Option<f64>,
    half_width: Option<f64>,
}

#[derive(Debug)]
enum CliError {
    /// Bad arguments or configuration (exit code 2).
    Usage(String),
    /// An eigenvalue solve failed (exit code 3).
    Solver(String),
}

impl From<qring::Error> for CliError {
    fn from(err: qring::Error) -> Self {
        match err {
            qring::Error::InvalidConfig(_) | qring::Error::Domain(_) => {
                CliError::Usage(err.to_string())
            }
            _ => CliError::Solver(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Solver(msg)) => {
            eprintln!("solver error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum(args) => {
            let rc = resolve(&args.common, Method::Both)?;
            cmd_spectrum(&rc, args.harmonic_test)
        }
        Command::Wavefunction(args) => {
            let rc = resolve(&args.common, Method::Numerov)?;
            cmd_wavefunction(&rc, args.n)
        }
        Command::Corral(args) => {
            let rc = resolve(&args.common, Method::Both)?;
            cmd_corral(&rc, args.nu, args.count)
        }
    }
}

/// Merges CLI flags, the optional config file, and built-in defaults, then
/// validates the result.
fn resolve(common: &CommonArgs, default_method: Method) -> Result<RunConfig, CliError> {
    let file = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|err| {
                CliError::Usage(format!("cannot read config file {}: {err}", path.display()))
            })?;
            parse_config_file(&text)?
        }
        None => FileConfig::default(),
    };
    let rc = RunConfig {
        charge_q: common.charge.or(file.charge).unwrap_or(100.0),
        radius_nm: common.radius.or(file.radius).unwrap_or(10.0),
        levels: common.levels.or(file.levels).unwrap_or(5),
        method: common.method.or(file.method).unwrap_or(default_method),
        grid_h: common.step.or(file.step).unwrap_or(0.1),
        half_width: common.half_width.or(file.half_width).unwrap_or(3.1),
        paper_protocol: common.paper_protocol,
        out: common.out.clone(),
    };
    if rc.levels < 1 {
        return Err(CliError::Usage("levels must be at least 1".into()));
    }
    if rc.levels > MAX_LEVELS {
        return Err(CliError::Usage(format!(
            "levels is capped at {MAX_LEVELS} (the perturbative seeds stop at n = {})",
            MAX_LEVELS - 1
        )));
    }
    if !(rc.grid_h.is_finite() && rc.grid_h > 0.0) {
        return Err(CliError::Usage(format!(
            "step must be positive, got {}",
            rc.grid_h
        )));
    }
    if !(rc.half_width.is_finite() && rc.half_width > 0.0) {
        return Err(CliError::Usage(format!(
            "half-width must be positive, got {}",
            rc.half_width
        )));
    }
    Ok(rc)
}

/// Parses a key=value configuration file ('#' starts a comment line).
fn parse_config_file(text: &str) -> Result<FileConfig, CliError> {
    let mut file = FileConfig::default();
    for (number, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "config line {}: expected key=value, got {line:?}",
                number + 1
            ))
        })?;
        let (key, value) = (key.trim(), value.trim());
        let bad_value = |what: &str| {
            CliError::Usage(format!(
                "config line {}: {key} must be {what}, got {value:?}",
                number + 1
            ))
        };
        match key {
            "charge" => file.charge = Some(value.parse().map_err(|_| bad_value("a number"))?),
            "radius" => file.radius = Some(value.parse().map_err(|_| bad_value("a number"))?),
            "levels" => file.levels = Some(value.parse().map_err(|_| bad_value("an integer"))?),
            "method" => {
                file.method = Some(
                    Method::from_str(value, true)
                        .map_err(|_| bad_value("perturbation, numerov, or both"))?,
                )
            }
            "step" => file.step = Some(value.parse().map_err(|_| bad_value("a number"))?),
            "half_width" | "half-width" => {
                file.half_width = Some(value.parse().map_err(|_| bad_value("a number"))?)
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "config line {}: unknown key {key:?}",
                    number + 1
                )))
            }
        }
    }
    Ok(file)
}

/// Ten-significant-digit scientific notation, locale independent.
fn sci(x: f64) -> String {
    format!("{x:.9e}")
}

/// Writes CSV to the path from `--out` ("-" means standard output).
fn emit_csv(path: &Path, csv: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        print!("{csv}");
        return Ok(());
    }
    fs::write(path, csv)
        .map_err(|err| CliError::Usage(format!("cannot write {}: {err}", path.display())))
}

struct SpectrumRow {
    n: u32,
    perturbation: Option<f64>,
    numerov: Option<f64>,
}

fn cmd_spectrum(rc: &RunConfig, harmonic_test: bool) -> Result<(), CliError> {
    let ring = RingConfig::new(rc.charge_q, rc.radius_nm)?;
    let hw = taylor_coefficients(&ring).hbar_omega;
    let mut rows = Vec::new();
    for n in 0..rc.levels as u32 {
        let seed = perturbed_level(n, &ring)?;
        let perturbation = match rc.method {
            Method::Numerov => None,
            _ if harmonic_test => Some(hw * (n as f64 + 0.5) - ring.v0),
            _ => Some(seed.axial_energy),
        };
        let numerov = if rc.method == Method::Perturbation {
            None
        } else {
            let problem = if harmonic_test {
                ShootingProblem::harmonic(ring.v0, hw, hw * (n as f64 + 0.5) - ring.v0, rc.grid_h)?
            } else if rc.paper_protocol {
                ShootingProblem::fixed_boundary(&ring, n, seed.axial_energy)?
            } else {
                ShootingProblem::bidirectional_window(
                    &ring,
                    seed.axial_energy,
                    rc.grid_h,
                    rc.half_width,
                )?
            };
            let (energy, _, _) = solve_eigenvalue(&problem, &seed)
                .map_err(|err| CliError::Solver(format!("level n = {n}: {err}")))?;
            Some(energy)
        };
        rows.push(SpectrumRow {
            n,
            perturbation,
            numerov,
        });
    }
    print!("{}", render_spectrum_table(&rows, rc.method));
    if let Some(path) = &rc.out {
        emit_csv(path, &render_spectrum_csv(&rows, rc.method))?;
    }
    Ok(())
}

fn spectrum_headers(method: Method) -> &'static [&'static str] {
    match method {
        Method::Perturbation => &["n", "E_perturbation_eV"],
        Method::Numerov => &["n", "E_numerov_eV"],
        Method::Both => &["n", "E_perturbation_eV", "E_numerov_eV", "difference_eV"],
    }
}

fn spectrum_cells(row: &SpectrumRow, method: Method) -> Vec<String> {
    let mut cells = vec![row.n.to_string()];
    if method != Method::Numerov {
        cells.push(sci(row.perturbation.unwrap()));
    }
    if method != Method::Perturbation {
        cells.push(sci(row.numerov.unwrap()));
    }
    if method == Method::Both {
        cells.push(sci(row.numerov.unwrap() - row.perturbation.unwrap()));
    }
    cells
}

fn render_spectrum_table(rows: &[SpectrumRow], method: Method) -> String {
    let mut out = String::new();
    for header in spectrum_headers(method) {
        out.push_str(&format!("{header:>19}"));
    }
    out.push('\n');
    for row in rows {
        for cell in spectrum_cells(row, method) {
            out.push_str(&format!("{cell:>19}"));
        }
        out.push('\n');
    }
    out
}

fn render_spectrum_csv(rows: &[SpectrumRow], method: Method) -> String {
    let mut out = spectrum_headers(method).join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&spectrum_cells(row, method).join(","));
        out.push('\n');
    }
    out
}

fn cmd_wavefunction(rc: &RunConfig, n: u32) -> Result<(), CliError> {
    if n as usize >= rc.levels {
        return Err(CliError::Usage(format!(
            "n = {n} is outside the requested {} levels",
            rc.levels
        )));
    }
    let ring = RingConfig::new(rc.charge_q, rc.radius_nm)?;
    let samples = match rc.method {
        Method::Both => {
            return Err(CliError::Usage(
                "wavefunction export needs a single method: perturbation or numerov".into(),
            ))
        }
        Method::Perturbation => {
            let norm = corrected_norm(n, &ring)?.sqrt();
            let intervals = (2.0 * rc.half_width / rc.grid_h).round() as usize;
            (0..=intervals)
                .map(|k| {
                    let z = -rc.half_width + k as f64 * rc.grid_h;
                    corrected_wavefunction(n, &ring, z).map(|value| (z, value / norm))
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        Method::Numerov => {
            let seed = perturbed_level(n, &ring)?;
            let problem = if rc.paper_protocol {
                ShootingProblem::fixed_boundary(&ring, n, seed.axial_energy)?
            } else {
                ShootingProblem::bidirectional_window(
                    &ring,
                    seed.axial_energy,
                    rc.grid_h,
                    rc.half_width,
                )?
            };
            let (_, grid, _) = solve_eigenvalue(&problem, &seed)
                .map_err(|err| CliError::Solver(format!("level n = {n}: {err}")))?;
            (0..grid.len())
                .map(|k| (grid.x_at(k), grid.values[k]))
                .collect()
        }
    };
    let mut csv = String::from("z_nm,Z\n");
    for (z, value) in samples {
        csv.push_str(&format!("{},{}\n", sci(z), sci(value)));
    }
    match &rc.out {
        Some(path) => emit_csv(path, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn cmd_corral(rc: &RunConfig, nu: i32, count: usize) -> Result<(), CliError> {
    if count < 1 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let ring = RingConfig::new(rc.charge_q, rc.radius_nm)?;
    let r_sq = ring.radius * ring.radius;
    let mut rows = Vec::new();
    for p in 1..=count {
        let mode = corral_mode(&ring, p, nu)?;
        let zero = mode.k * ring.radius;
        let dimensionless = TWO_M_OVER_HBAR_SQ * mode.energy * r_sq;
        rows.push([
            p.to_string(),
            sci(zero),
            sci(mode.k),
            sci(mode.energy),
            sci(dimensionless),
        ]);
    }
    let headers = ["p", "zero_j_nu_p", "k_per_nm", "E_eV", "2mER2_hbar2"];
    let mut table = String::new();
    for header in headers {
        table.push_str(&format!("{header:>19}"));
    }
    table.push('\n');
    for row in &rows {
        for cell in row {
            table.push_str(&format!("{cell:>19}"));
        }
        table.push('\n');
    }
    print!("{table}");
    if let Some(path) = &rc.out {
        let mut csv = headers.join(",");
        csv.push('\n');
        for row in &rows {
            csv.push_str(&row.join(","));
            csv.push('\n');
        }
        emit_csv(path, &csv)?;
    }
    Ok(())
}
