//! Command-line front end for `glinfo-core`.
//!
//! Every subcommand produces an [`OutputTable`] plus a list of failures. The
//! binary prints the table to stdout and failures to stderr.

// `!(x > 0.0)` is used on purpose: NaN must fail every precondition.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glinfo_core::{builtin_materials, load_materials, lookup, Material};

pub mod commands;
pub mod output;

pub use output::{Cell, Column, Format, OutputTable};

#[derive(Debug, Parser)]
#[command(
    name = "glinfo",
    version,
    about = "Information and complexity measures of the Ginzburg-Landau N/S interface"
)]
pub struct Cli {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Replace the builtin catalog with a `name,Z,xi0_nm,Tc_K` file.
    #[arg(long, global = true, value_name = "PATH")]
    pub materials_file: Option<PathBuf>,

    /// Relative tolerance for closed-form vs quadrature checks.
    #[arg(long, global = true, value_name = "X", default_value_t = 1e-8)]
    pub rel_tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measures at one or more temperatures.
    Measures(commands::measures::MeasuresArgs),
    /// Recompute one of the reference tables for the catalog.
    Table {
        #[arg(value_enum)]
        which: TableId,
    },
    /// Tsallis entropy over a (q, T) grid.
    Tsallis(commands::tsallis::TsallisArgs),
    /// Liu decomposition of the Shannon entropy.
    Liu(commands::liu::LiuArgs),
    /// Solve the order-parameter boundary value problem and compare with tanh.
    BvpCheck(commands::bvp::BvpArgs),
    /// Run the full oracle suite; nonzero exit if any check fails.
    Verify(commands::verify::VerifyArgs),
    /// Inspect material catalogs.
    Materials {
        #[command(subcommand)]
        action: MaterialsAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    #[value(name = "1")]
    Liu,
    #[value(name = "2")]
    SemiInfinite,
    #[value(name = "3")]
    Truncated,
}

#[derive(Debug, Subcommand)]
pub enum MaterialsAction {
    /// Print the active catalog in the file format.
    List,
    /// Validate a catalog file and print it.
    Load { path: PathBuf },
}

/// Material by name, or explicit parameters.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = true)]
pub struct MaterialSource {
    /// Material name from the catalog (case-insensitive).
    #[arg(long, conflicts_with_all = ["xi0", "tc"])]
    pub material: Option<String>,
    /// Zero-temperature coherence length in nm.
    #[arg(long, requires = "tc")]
    pub xi0: Option<f64>,
    /// Critical temperature in K.
    #[arg(long = "Tc", id = "tc", value_name = "TC", requires = "xi0")]
    pub tc: Option<f64>,
}

/// Temperatures as a list or an evenly spaced sweep. Values may carry a
/// `Tc` suffix, read as a multiple of the critical temperature.
#[derive(Debug, Clone, Args)]
pub struct TemperatureArgs {
    /// Comma-separated temperatures in K, e.g. `0,1.5,0.5Tc`.
    #[arg(
        long = "T",
        id = "temperatures",
        value_name = "T",
        value_delimiter = ',',
        conflicts_with = "sweep"
    )]
    pub temperatures: Vec<String>,
    /// `start:end:count`, e.g. `0:0.99Tc:100`.
    #[arg(long)]
    pub sweep: Option<String>,
}

/// A user error: bad arguments, unknown names, malformed files. Exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// 2 for usage errors, 1 for everything else.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<glinfo_core::Error>() {
        Some(
            glinfo_core::Error::NotFound { .. }
            | glinfo_core::Error::InvalidParameter { .. }
            | glinfo_core::Error::Parse { .. }
            | glinfo_core::Error::DuplicateName { .. }
            | glinfo_core::Error::InvalidField { .. }
            | glinfo_core::Error::Io(_),
        ) => 2,
        _ => 1,
    }
}

/// Result of one subcommand.
#[derive(Debug)]
pub struct Report {
    pub table: OutputTable,
    /// Per-point or per-check failures; any entry makes the exit status 1.
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(table: OutputTable) -> Self {
        Self {
            table,
            failures: Vec::new(),
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    if !(cli.rel_tol > 0.0) {
        return Err(usage(format!(
            "--rel-tol must be positive, got {}",
            cli.rel_tol
        )));
    }
    let catalog = || catalog(cli);
    match &cli.command {
        Command::Measures(args) => commands::measures::run(args, &catalog()?),
        Command::Table { which } => commands::table::run(*which, &catalog()?),
        Command::Tsallis(args) => commands::tsallis::run(args, &catalog()?),
        Command::Liu(args) => commands::liu::run(args, &catalog()?),
        Command::BvpCheck(args) => commands::bvp::run(args),
        Command::Verify(args) => commands::verify::run(args, cli.rel_tol),
        Command::Materials { action } => match action {
            MaterialsAction::List => Ok(Report::ok(commands::materials_table(&catalog()?))),
            MaterialsAction::Load { path } => Ok(Report::ok(commands::materials_table(
                &load_materials(path)?,
            ))),
        },
    }
}

fn catalog(cli: &Cli) -> anyhow::Result<Vec<Material>> {
    match &cli.materials_file {
        Some(path) => Ok(load_materials(path)?),
        None => Ok(builtin_materials()),
    }
}

impl MaterialSource {
    pub fn resolve(&self, catalog: &[Material]) -> anyhow::Result<Material> {
        match (&self.material, self.xi0, self.tc) {
            (Some(name), _, _) => Ok(lookup(catalog, name)?.clone()),
            (None, Some(xi0), Some(tc)) => {
                if !(xi0 > 0.0 && xi0.is_finite()) {
                    return Err(usage(format!("--xi0 must be positive, got {xi0}")));
                }
                if !(tc > 0.0 && tc.is_finite()) {
                    return Err(usage(format!("--Tc must be positive, got {tc}")));
                }
                Ok(Material {
                    name: "custom".into(),
                    atomic_number: 0,
                    xi0,
                    tc,
                })
            }
            _ => Err(usage("give --material or both --xi0 and --Tc")),
        }
    }
}

impl TemperatureArgs {
    /// Requested temperatures in K, in input order; `[0]` when none given.
    pub fn resolve(&self, tc: f64) -> anyhow::Result<Vec<f64>> {
        if let Some(spec) = &self.sweep {
            return parse_sweep(spec, tc);
        }
        if self.temperatures.is_empty() {
            return Ok(vec![0.0]);
        }
        self.temperatures
            .iter()
            .map(|s| parse_temperature(s, tc))
            .collect()
    }
}

/// `"1.5"` is 1.5 K; `"0.5Tc"` is half the critical temperature.
pub fn parse_temperature(s: &str, tc: f64) -> anyhow::Result<f64> {
    let s = s.trim();
    let (number, factor) = match s.strip_suffix("Tc").or_else(|| s.strip_suffix("tc")) {
        Some(head) => (head.trim(), tc),
        None => (s, 1.0),
    };
    let v: f64 = number
        .parse()
        .map_err(|_| usage(format!("cannot read temperature {s:?}")))?;
    if !(v >= 0.0 && v.is_finite()) {
        return Err(usage(format!(
            "temperature must be non-negative, got {s:?}"
        )));
    }
    Ok(v * factor)
}

/// `start:end:count`, ascending, evenly spaced, both ends included.
pub fn parse_sweep(spec: &str, tc: f64) -> anyhow::Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, end, count] = parts[..] else {
        return Err(usage(format!(
            "sweep must be start:end:count, got {spec:?}"
        )));
    };
    let start = parse_temperature(start, tc)?;
    let end = parse_temperature(end, tc)?;
    let count: usize = count.trim().parse().map_err(|_| {
        usage(format!(
            "sweep count must be a positive integer, got {count:?}"
        ))
    })?;
    match count {
        0 => Err(usage("sweep count must be at least 1")),
        1 => Ok(vec![start]),
        _ if end <= start => Err(usage(format!("sweep end {end} must exceed start {start}"))),
        _ => {
            let step = (end - start) / (count - 1) as f64;
            let mut out: Vec<f64> = (0..count).map(|k| start + k as f64 * step).collect();
            out[count - 1] = end;
            Ok(out)
        }
    }
}
