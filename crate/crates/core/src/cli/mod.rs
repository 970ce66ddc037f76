//! Command-line front end: SI-unit conversion, sweeps over separation or
//! exchange value, CSV/JSON output, and the reproduction run.
//!
//! The `thermal-spin` binary is a thin wrapper around [`run`].

pub mod tables;
pub mod units;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use crate::error::Error;
use crate::spinstate::Statistics;
use crate::statmech::{
    fermi_exchange_t0, fugacity_from_degeneracy, ExchangeValue, ReducedSeparation, ThermalGasSpec,
};
use tables::{DecompositionRecord, ExchangeRow, SpectrumRecord};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Physics(Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Physics(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Physics(e) if e.is_domain() => EXIT_DOMAIN,
            CliError::Physics(_) | CliError::Io(_) => EXIT_IO,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    /// Blackbody photons (2 polarizations, bosons)
    Photon,
    /// Massive spin-1 ideal Bose gas (3 spin states)
    Massive,
    /// Zero-temperature free electron gas (2 spin states, fermions)
    #[value(name = "fermion-T0", alias = "fermion-t0")]
    FermionT0,
    /// Exchange value supplied directly with --f
    #[value(name = "abstract-f")]
    AbstractF,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::Photon => "photon",
            System::Massive => "massive",
            System::FermionT0 => "fermion-T0",
            System::AbstractF => "abstract-f",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatisticsArg {
    Boson,
    Fermion,
}

impl From<StatisticsArg> for Statistics {
    fn from(s: StatisticsArg) -> Self {
        match s {
            StatisticsArg::Boson => Statistics::Boson,
            StatisticsArg::Fermion => Statistics::Fermion,
        }
    }
}

/// Uniform grid `start:stop:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepRange {
    pub fn new(start: f64, stop: f64, count: usize) -> std::result::Result<Self, String> {
        if count < 2 {
            return Err(format!("range needs at least 2 points, got {count}"));
        }
        if !(start.is_finite() && stop.is_finite()) || start >= stop {
            return Err(format!("range needs start < stop, got {start}:{stop}"));
        }
        if start < 0.0 {
            return Err(format!("range start must be non-negative, got {start}"));
        }
        Ok(SweepRange { start, stop, count })
    }

    pub fn points(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for SweepRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(format!("expected start:stop:count, got '{s}'"));
        };
        let parse = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number '{x}': {e}"))
        };
        let count = n
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad count '{n}': {e}"))?;
        SweepRange::new(parse(a)?, parse(b)?, count)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "thermal-spin",
    version,
    about = "Spin entanglement of two particles from a thermal ideal quantum gas",
    after_help = "Physical constants (CODATA): hbar = 1.054571817e-34 J s, h = 6.62607015e-34 J s, \
                  k_B = 1.380649e-23 J/K, c = 299792458 m/s, u = 1.6605390666e-27 kg.\n\
                  Reduced separations: photon u = r k_B T/(hbar c); massive s = r/lambda with \
                  lambda = h/sqrt(2 pi m k_B T); fermion-T0 x = k_F r with k_F = (3 pi^2 n)^(1/3).\n\
                  Exit codes: 0 success, 1 i/o or numerical failure, 2 usage, 3 physics domain, \
                  4 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the exchange function f over a range of separations
    Exchange(ExchangeArgs),
    /// Partial-transpose spectrum, negativity and PPT verdict of the two-spin state
    Spectrum(SpectrumArgs),
    /// Separable decomposition weights of the two-qutrit state and its reconstruction error
    Decompose(DecomposeArgs),
    /// Re-derive every closed-form result numerically and report pass/fail per check
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GasArgs {
    /// Temperature in kelvin
    #[arg(long = "temperature-k")]
    pub temperature_k: Option<f64>,
    /// Particle mass in atomic mass units (massive system)
    #[arg(long = "mass-amu")]
    pub mass_amu: Option<f64>,
    /// Number density in m^-3 (massive: fixes the fugacity; fermion-T0: fixes k_F)
    #[arg(long = "density-m3")]
    pub density_m3: Option<f64>,
    /// Phase-space density n lambda^3 / 3 of the massive gas
    #[arg(long)]
    pub degeneracy: Option<f64>,
    /// Fugacity z in (0, 1] of the massive gas
    #[arg(long)]
    pub fugacity: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ExchangeArgs {
    #[arg(long, value_enum)]
    pub system: System,
    /// Reduced separation grid start:stop:count
    #[arg(long, conflicts_with = "separation_m")]
    pub range: Option<SweepRange>,
    /// Single physical separation in meters
    #[arg(long = "separation-m")]
    pub separation_m: Option<f64>,
    #[command(flatten)]
    pub gas: GasArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Exchange value f in [-1, 1]
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<f64>,
    /// Reduced separation (u, s or k_F r depending on the system)
    #[arg(long = "sep-reduced")]
    pub sep_reduced: Option<f64>,
    /// Physical separation in meters
    #[arg(long = "separation-m")]
    pub separation_m: Option<f64>,
    /// Sweep of reduced separations start:stop:count
    #[arg(long)]
    pub range: Option<SweepRange>,
    /// Sweep of exchange values start:stop:count
    #[arg(long = "f-range")]
    pub f_range: Option<SweepRange>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub system: System,
    #[command(flatten)]
    pub point: PointArgs,
    /// Number of spin states (abstract-f only)
    #[arg(long)]
    pub alpha: Option<usize>,
    /// Exchange statistics (abstract-f only)
    #[arg(long, value_enum)]
    pub statistics: Option<StatisticsArg>,
    #[command(flatten)]
    pub gas: GasArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    /// massive or abstract-f
    #[arg(long, value_enum, default_value_t = System::AbstractF)]
    pub system: System,
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub gas: GasArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Number of uniform points on f in [0, 1]
    #[arg(long, default_value_t = verify::DEFAULT_GRID)]
    pub grid: usize,
    /// Flip the sign of f^2 in the bosonic states to exercise the failure path
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exchange function and unit conversion for one system.
#[derive(Debug, Clone, Copy)]
pub struct GasContext {
    pub system: System,
    pub gas: Option<ThermalGasSpec>,
    /// Physical length of one reduced separation unit, when known.
    pub length_scale_m: Option<f64>,
}

impl GasContext {
    pub fn resolve(system: System, args: &GasArgs) -> Result<Self, CliError> {
        let (gas, length_scale_m) = match system {
            System::Photon => (
                Some(ThermalGasSpec::MasslessPhoton),
                args.temperature_k.map(units::photon_length_m).transpose()?,
            ),
            System::Massive => {
                let lambda = match (args.mass_amu, args.temperature_k) {
                    (Some(m), Some(t)) => {
                        Some(units::thermal_wavelength_m(units::amu_to_kg(m)?, t)?)
                    }
                    _ => None,
                };
                let z = if let Some(z) = args.fugacity {
                    Some(z)
                } else if let Some(d) = args.degeneracy {
                    Some(fugacity_from_degeneracy(d)?)
                } else if let (Some(n), Some(l)) = (args.density_m3, lambda) {
                    Some(fugacity_from_degeneracy(units::degeneracy(n, l, 3)?)?)
                } else {
                    None
                };
                (z.map(ThermalGasSpec::massive).transpose()?, lambda)
            }
            System::FermionT0 => (
                None,
                args.density_m3
                    .map(|n| units::fermi_wavevector(n).map(|k| 1.0 / k))
                    .transpose()?,
            ),
            System::AbstractF => (None, None),
        };
        Ok(GasContext {
            system,
            gas,
            length_scale_m,
        })
    }

    pub fn exchange(&self, sep: ReducedSeparation) -> Result<ExchangeValue, CliError> {
        match (self.system, self.gas) {
            (System::FermionT0, _) => Ok(fermi_exchange_t0(sep)),
            (_, Some(gas)) => Ok(gas.exchange(sep)?),
            (System::Massive, None) => Err(usage(
                "massive system needs --fugacity, --degeneracy, or \
                 --temperature-k with --mass-amu and --density-m3",
            )),
            _ => Err(usage(format!(
                "system {} has no exchange function; pass --f",
                self.system.name()
            ))),
        }
    }

    pub fn reduce(&self, separation_m: f64) -> Result<f64, CliError> {
        let scale = self.length_scale_m.ok_or_else(|| {
            usage(format!(
                "--separation-m for {} needs the physical inputs that fix the length scale",
                self.system.name()
            ))
        })?;
        Ok(ReducedSeparation::new(separation_m / scale)?.value())
    }

    pub fn exchange_rows(&self, reduced: &[f64]) -> Result<Vec<ExchangeRow>, CliError> {
        reduced
            .par_iter()
            .map(|&u| {
                let f = self.exchange(ReducedSeparation::new(u)?)?;
                Ok(ExchangeRow {
                    sep_reduced: u,
                    sep_si: self.length_scale_m.map(|l| u * l),
                    f: f.value(),
                })
            })
            .collect()
    }
}

/// Evaluation points `(f, sep_reduced)` and whether they form a sweep.
type Points = (Vec<(ExchangeValue, Option<f64>)>, bool);

fn resolve_points(ctx: &GasContext, point: &PointArgs) -> Result<Points, CliError> {
    let given = [
        point.f.is_some(),
        point.sep_reduced.is_some(),
        point.separation_m.is_some(),
        point.range.is_some(),
        point.f_range.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(usage(
            "give exactly one of --f, --sep-reduced, --separation-m, --range, --f-range",
        ));
    }
    let at_sep = |u: f64| -> Result<(ExchangeValue, Option<f64>), CliError> {
        Ok((ctx.exchange(ReducedSeparation::new(u)?)?, Some(u)))
    };
    if let Some(f) = point.f {
        return Ok((vec![(ExchangeValue::new(f)?, None)], false));
    }
    if let Some(u) = point.sep_reduced {
        return Ok((vec![at_sep(u)?], false));
    }
    if let Some(r) = point.separation_m {
        return Ok((vec![at_sep(ctx.reduce(r)?)?], false));
    }
    if let Some(range) = point.f_range {
        let pts = range
            .points()
            .into_iter()
            .map(|f| Ok((ExchangeValue::new(f)?, None)))
            .collect::<Result<_, CliError>>()?;
        return Ok((pts, true));
    }
    let range = point.range.expect("exactly one point selector");
    let pts = range
        .points()
        .into_par_iter()
        .map(at_sep)
        .collect::<Result<_, CliError>>()?;
    Ok((pts, true))
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn cmd_exchange(args: &ExchangeArgs) -> Result<Vec<ExchangeRow>, CliError> {
    if args.system == System::AbstractF {
        return Err(usage("exchange needs a physical system, not abstract-f"));
    }
    let ctx = GasContext::resolve(args.system, &args.gas)?;
    let reduced = match (args.range, args.separation_m) {
        (Some(range), None) => range.points(),
        (None, Some(r)) => vec![ctx.reduce(r)?],
        _ => return Err(usage("exchange needs --range a:b:n or --separation-m")),
    };
    ctx.exchange_rows(&reduced)
}

fn spectrum_layout(args: &SpectrumArgs) -> Result<(usize, Statistics), CliError> {
    let fixed = |alpha: usize, stats: Statistics| {
        if args.alpha.is_some_and(|a| a != alpha)
            || args
                .statistics
                .is_some_and(|s| Statistics::from(s) != stats)
        {
            Err(usage(format!(
                "--alpha/--statistics are fixed by --system {}",
                args.system.name()
            )))
        } else {
            Ok((alpha, stats))
        }
    };
    match args.system {
        System::Photon => fixed(2, Statistics::Boson),
        System::Massive => fixed(3, Statistics::Boson),
        System::FermionT0 => fixed(2, Statistics::Fermion),
        System::AbstractF => Ok((
            args.alpha.unwrap_or(2),
            args.statistics.map_or(Statistics::Boson, Statistics::from),
        )),
    }
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<(Vec<SpectrumRecord>, bool), CliError> {
    let (alpha, statistics) = spectrum_layout(args)?;
    let ctx = GasContext::resolve(args.system, &args.gas)?;
    let (points, sweep) = resolve_points(&ctx, &args.point)?;
    let records = points
        .into_par_iter()
        .map(|(f, sep)| Ok(SpectrumRecord::compute(f, alpha, statistics, sep)?))
        .collect::<Result<_, CliError>>()?;
    Ok((records, sweep))
}

pub fn cmd_decompose(args: &DecomposeArgs) -> Result<(Vec<DecompositionRecord>, bool), CliError> {
    if !matches!(args.system, System::Massive | System::AbstractF) {
        return Err(usage(
            "the separable decomposition applies to the two-qutrit state (massive or abstract-f)",
        ));
    }
    let ctx = GasContext::resolve(args.system, &args.gas)?;
    let (points, sweep) = resolve_points(&ctx, &args.point)?;
    let records = points
        .into_iter()
        .map(|(f, sep)| Ok(DecompositionRecord::compute(f, sep)?))
        .collect::<Result<_, CliError>>()?;
    Ok((records, sweep))
}

/// Executes one parsed command line, writing its output.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Exchange(args) => {
            let rows = cmd_exchange(&args)?;
            let mut out = open_output(&args.output.out)?;
            match args.output.format {
                OutputFormat::Csv => tables::write_exchange_csv(&mut out, &rows)?,
                OutputFormat::Json => {
                    let ctx_fugacity = match args.system {
                        System::Massive => GasContext::resolve(args.system, &args.gas)?
                            .gas
                            .and_then(|g| g.fugacity()),
                        _ => None,
                    };
                    tables::write_exchange_json(&mut out, args.system.name(), ctx_fugacity, &rows)?
                }
            }
            out.flush()?;
        }
        Command::Spectrum(args) => {
            let (records, sweep) = cmd_spectrum(&args)?;
            let mut out = open_output(&args.out)?;
            match (args.format, sweep) {
                (OutputFormat::Csv, _) => tables::write_spectrum_csv(&mut out, &records)?,
                (OutputFormat::Json, false) => tables::write_json(&mut out, &records[0])?,
                (OutputFormat::Json, true) => tables::write_json(&mut out, &records)?,
            }
            out.flush()?;
        }
        Command::Decompose(args) => {
            let (records, sweep) = cmd_decompose(&args)?;
            let mut out = open_output(&args.out)?;
            match (args.format, sweep) {
                (OutputFormat::Csv, _) => tables::write_decomposition_csv(&mut out, &records)?,
                (OutputFormat::Json, false) => tables::write_json(&mut out, &records[0])?,
                (OutputFormat::Json, true) => tables::write_json(&mut out, &records)?,
            }
            out.flush()?;
        }
        Command::VerifyPaper(args) => {
            let report = verify::run_verification(verify::VerifyOptions {
                grid: args.grid,
                inject_fault: args.inject_fault,
            })?;
            let mut out = open_output(&args.out)?;
            writeln!(out, "{report}")?;
            out.flush()?;
            if !report.all_passed() {
                let names: Vec<_> = report.failures().map(|c| c.name).collect();
                return Err(CliError::Verification(names.join(", ")));
            }
        }
    }
    Ok(())
}
