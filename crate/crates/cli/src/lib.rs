//! Command-line front end for `lensspoof-core`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code: 0 on success, 1 when the optics or image layers reject the
//! request, 2 for usage and configuration mistakes.

pub mod config;
pub mod report;
pub mod units;

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::units::{FocalSpec, Length};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{}: {0}", .0.name())]
    Domain(#[from] lensspoof_core::Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) | CliError::Output(_) => EXIT_DOMAIN,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lensspoof",
    version,
    about = "Model, plan, simulate and detect optical-lens depth spoofing"
)]
pub struct Cli {
    /// JSON run configuration; flags override its fields.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Camera focal length (default 26mm).
    #[arg(long, global = true, value_name = "LEN", allow_hyphen_values = true)]
    pub fc: Option<Length>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one attack stack.
    Predict(PredictArgs),
    /// Evaluate a grid of stacks and write CSV.
    Sweep(GridArgs),
    /// Find a lens and gap that spoof a target depth.
    Plan(PlanArgs),
    /// Render an attacked view of an image.
    Simulate(SimulateArgs),
    /// Run the blur detector on an image.
    Detect(DetectArgs),
    /// Compare the closed-form magnification with the ray trace over a grid.
    Divergence(GridArgs),
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Attack-lens focal length, or `none`.
    #[arg(long = "f", value_name = "LEN", allow_hyphen_values = true)]
    pub focal_length: FocalSpec,
    /// Gap between attack lens and camera lens.
    #[arg(long = "db", value_name = "LEN", allow_hyphen_values = true)]
    pub gap: Length,
    /// Object distance from the attack lens.
    #[arg(long = "do", value_name = "LEN", allow_hyphen_values = true)]
    pub object_distance: Length,
    /// Also print the traced image positions.
    #[arg(long)]
    pub oracle: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Comma-separated focal lengths (`none` allowed).
    #[arg(
        long = "f",
        value_name = "LENS",
        allow_hyphen_values = true,
        value_delimiter = ','
    )]
    pub focal_lengths: Option<Vec<FocalSpec>>,
    /// Comma-separated gaps.
    #[arg(
        long = "db",
        value_name = "LENS",
        allow_hyphen_values = true,
        value_delimiter = ','
    )]
    pub gaps: Option<Vec<Length>>,
    /// Comma-separated object distances.
    #[arg(
        long = "do",
        value_name = "LENS",
        allow_hyphen_values = true,
        value_delimiter = ','
    )]
    pub object_distances: Option<Vec<Length>>,
    /// Write CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    #[arg(long, value_name = "LEN", allow_hyphen_values = true)]
    pub target: Option<Length>,
    #[arg(long = "do", value_name = "LEN", allow_hyphen_values = true)]
    pub object_distance: Option<Length>,
    /// Comma-separated candidate focal lengths.
    #[arg(
        long,
        value_name = "LENS",
        allow_hyphen_values = true,
        value_delimiter = ','
    )]
    pub candidates: Option<Vec<Length>>,
    /// Smallest gap to consider (default 1cm).
    #[arg(long, value_name = "LEN", allow_hyphen_values = true)]
    pub gap_min: Option<Length>,
    /// Largest gap to consider (default 15cm).
    #[arg(long, value_name = "LEN", allow_hyphen_values = true)]
    pub gap_max: Option<Length>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// JSON sidecar path (default: output with a .json extension).
    #[arg(long, value_name = "PATH")]
    pub sidecar: Option<PathBuf>,
    #[arg(long = "f", value_name = "LEN", allow_hyphen_values = true)]
    pub focal_length: Option<FocalSpec>,
    #[arg(long = "db", value_name = "LEN", allow_hyphen_values = true)]
    pub gap: Option<Length>,
    #[arg(long = "do", value_name = "LEN", allow_hyphen_values = true)]
    pub object_distance: Option<Length>,
    /// `full` or `circle:CX,CY,R` in pixels.
    #[arg(long, value_name = "REGION", value_parser = commands::parse_region)]
    pub region: Option<lensspoof_core::RegionSpec>,
    /// Blur sigma in pixels; overrides the focus-shift mapping.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Pixels of blur sigma per meter of focal-plane shift (default 1500).
    #[arg(long)]
    pub blur_per_meter: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write the verdict JSON here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub tile_size: Option<usize>,
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long)]
    pub min_fraction: Option<f64>,
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams. `args` includes the program name.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match commands::execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
