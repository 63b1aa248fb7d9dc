//! `er-dirichlet`: run identity checks and sweeps, evaluate the series,
//! export surface meshes and probe the σ/t behaviour of the alternating family.
//!
//! Exit codes: 0 pass, 1 check failed, 2 domain or usage error, 3 I/O error.

mod commands;
mod output;
mod parse;

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub const THREADS_ENV: &str = "ER_DIRICHLET_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Domain {
        code: String,
        message: String,
        offending: String,
    },
    /// Exit 3.
    Io { message: String, path: String },
}

impl CliError {
    pub fn usage(message: impl Into<String>, offending: impl Into<String>) -> Self {
        CliError::Domain {
            code: "usage".to_string(),
            message: message.into(),
            offending: offending.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io {
            message: err.to_string(),
            path: path.display().to_string(),
        }
    }

    pub fn is_usage(&self) -> bool {
        matches!(self, CliError::Domain { code, .. } if code == "usage")
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain { .. } => 2,
            CliError::Io { .. } => 3,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            CliError::Domain {
                code,
                message,
                offending,
            } => json!({"code": code, "message": message, "offending_input": offending}),
            CliError::Io { message, path } => {
                json!({"code": "io", "message": message, "offending_input": path})
            }
        }
    }
}

impl From<er_dirichlet::Error> for CliError {
    fn from(e: er_dirichlet::Error) -> Self {
        CliError::Domain {
            code: e.code().to_string(),
            message: e.to_string(),
            offending: e.offending_input(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "er-dirichlet",
    version,
    about = "Dirichlet series from Euler-Ramanujan identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one identity check and print its report.
    Verify(VerifyArgs),
    /// Run a check over a grid of inputs.
    Sweep(SweepArgs),
    /// Sample a surface and export it as OBJ or CSV.
    Surface(SurfaceArgs),
    /// Evaluate one of the three series families.
    Series(SeriesArgs),
    /// Probe the behaviour of the alternating series for large sigma or t.
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Prop6,
    Log,
    Product,
    Entry11,
    Telescope,
    Funceq,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Outer truncation K.
    #[arg(long, default_value_t = 10_000)]
    pub terms: u64,
    /// Tolerance added to the tail bound in the pass criterion.
    #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
    pub tol: f64,
    /// Write the result to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub name: CheckName,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// `A` for product/entry11, `a` for funceq.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Complex literal `RE+IMi`.
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<String>,
    /// Complex literal `RE+IMi`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

/// Grid axes are `lo:hi:n` or comma lists.
#[derive(Debug, Args)]
pub struct SweepArgs {
    pub name: CheckName,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "zeta-re", allow_hyphen_values = true)]
    pub zeta_re: Option<String>,
    #[arg(long = "zeta-im", allow_hyphen_values = true)]
    pub zeta_im: Option<String>,
    /// Polar radius of zeta (prop5).
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Polar angle of zeta (prop5).
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    #[arg(long = "s-re", allow_hyphen_values = true)]
    pub s_re: Option<String>,
    #[arg(long = "s-im", allow_hyphen_values = true)]
    pub s_im: Option<String>,
    /// Draw this many uniform samples inside the axis ranges instead of the grid.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Drop points outside the check's domain instead of failing.
    #[arg(long)]
    pub skip_invalid: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceName {
    ScherkWe,
    ScherkFamily,
    Helicoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResidualName {
    None,
    Prop1,
    Prop2,
    Prop4,
    Prop5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshFormat {
    Obj,
    Csv,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    pub surface: SurfaceName,
    /// Half-width of the square [-r, r]^2 in the zeta plane (scherk-we).
    #[arg(long)]
    pub r: Option<f64>,
    /// Parameter rectangle `u0:u1:v0:v1`; polar `r0:r1:phi0:phi1` for the helicoid.
    #[arg(long, allow_hyphen_values = true)]
    pub region: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub theta: f64,
    #[arg(long, default_value_t = 32)]
    pub nu: usize,
    #[arg(long, default_value_t = 32)]
    pub nv: usize,
    #[arg(long, value_enum, default_value_t = ResidualName::None)]
    pub residual: ResidualName,
    /// Outer truncation K for the decomposition residuals.
    #[arg(long, default_value_t = 100_000)]
    pub terms: u64,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = MeshFormat::Obj)]
    pub format: MeshFormat,
    /// Mesh file; without it the mesh goes to stdout and the summary to stderr.
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Alt,
    Geo,
    Heli,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Complex literal `RE+IMi`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    #[arg(long, allow_hyphen_values = true)]
    pub param: f64,
    /// Absolute tolerance on the tail (default: unit roundoff, relative).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbeKind {
    SigmaLimit,
    Oscillation,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    pub kind: ProbeKind,
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    /// One value or a comma list / `lo:hi:n` grid for sigma-limit.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    /// Imaginary parts for the oscillation probe.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::usage(
            format!("{THREADS_ENV} must be a positive integer"),
            raw.clone(),
        )
    })?;
    // A second initialisation in the same process is harmless.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Verify(a) => commands::verify(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::Surface(a) => commands::surface(&a),
        Command::Series(a) => commands::series(&a),
        Command::Probe(a) => commands::probe(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let err = CliError::usage(e.kind().to_string(), e.to_string().trim().to_string());
            println!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            println!("{}", err.to_json());
            ExitCode::from(err.exit_code())
        }
    }
}
