use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const INIT_HELP: &str = "\
Initial data as a signed sum of terms `c sin m` or `c cos m`.
The coefficient defaults to 1, the mode to 1, and whitespace is ignored;
a bare number is a constant. Examples: \"-sin+0.1sin2\", \"cos\",
\"0.3 cos 2 - 1e-2 sin 5\".";

/// Simulation and spectral analysis of the CLM and De Gregorio equations.
#[derive(Debug, Parser)]
#[command(name = "dg-lab", version, about, after_help = INIT_HELP)]
pub struct Cli {
    /// Output directory; relative paths are placed under $DG_LAB_OUT when set.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` configuration file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate a nonlinear model and record norms and invariants.
    Simulate(SimulateArgs),
    /// Evolve the linearized equation in the holomorphic sector.
    Linear(LinearArgs),
    /// Sweep generalized eigenfunctions over a grid of spectral parameters.
    Eigen(EigenArgs),
    /// Report zeros, invariants and norms of a stored field.
    Invariants(InvariantsArgs),
    /// Tabulate exact solutions for cross-checking.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Clm,
    Dg,
    DgMean,
    Transport,
}

impl std::str::FromStr for ModelKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleModel {
    Clm,
    Transport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Args)]
#[command(after_help = INIT_HELP)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// Initial data (see below).
    #[arg(long, allow_hyphen_values = true)]
    pub init: Option<String>,
    /// Start from a stored DGF1 field instead of --init.
    #[arg(long, conflicts_with = "init")]
    pub from: Option<PathBuf>,
    /// Maximum Fourier mode.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
    /// Final time.
    #[arg(long)]
    pub t: Option<f64>,
    /// Steps between recorded rows.
    #[arg(long)]
    pub record_every: Option<usize>,
    /// Records between DGF1 snapshots (0 disables).
    #[arg(long)]
    pub snapshot_every: Option<usize>,
    /// Exponent of the weighted norm column.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Perturbation size, echoed in the report.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Sup norm treated as blow-up.
    #[arg(long)]
    pub sup_ceiling: Option<f64>,
    /// Disable 3/2-rule dealiasing.
    #[arg(long)]
    pub no_dealias: bool,
    /// Apply the exponential filter exp(-36 (k/N)^36) after each step.
    #[arg(long)]
    pub filter: bool,
    /// Compute zeros and the principal-value invariant at each record.
    #[arg(long)]
    pub track_invariants: bool,
    /// Velocity vanishing at this angle instead of mean-zero velocity.
    #[arg(long, allow_hyphen_values = true)]
    pub gauge_point: Option<f64>,
    /// Coefficient of the extra term for the dg-mean model.
    #[arg(long, allow_hyphen_values = true)]
    pub mean_c: Option<f64>,
    /// Advecting field for the transport model, in the --init language.
    #[arg(long, allow_hyphen_values = true)]
    pub transport: Option<String>,
    /// Rotate and rescale the data so the decreasing zero sits at 0 with slope -1.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
#[command(after_help = INIT_HELP)]
pub struct LinearArgs {
    /// Initial data; its positive modes are kept.
    #[arg(long, allow_hyphen_values = true)]
    pub init: Option<String>,
    /// Number of retained modes.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub t: Option<f64>,
    /// Steps between samples.
    #[arg(long)]
    pub sample_every: Option<usize>,
    /// Exponent of the weighted norm.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Start of the decay-fit window.
    #[arg(long)]
    pub fit_from: Option<f64>,
    /// Damp the top modes instead of truncating hard.
    #[arg(long)]
    pub absorber: bool,
    /// Add the rank-one term that pins the value at 0.
    #[arg(long)]
    pub gauge_term: bool,
    /// Modes whose magnitudes are written as columns.
    #[arg(long, value_delimiter = ',')]
    pub modes: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    /// Grid `start:step:stop` of s, with λ = i s.
    #[arg(long)]
    pub s_grid: Option<String>,
    /// Truncation for tail diagnostics.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
    /// Write each truncated series as an EIG1 file.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// DGF1 field to analyse.
    #[arg(long)]
    pub input: PathBuf,
    /// Exponent of the weighted norm.
    #[arg(long)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Args)]
#[command(after_help = INIT_HELP)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub model: Option<OracleModel>,
    #[arg(long, allow_hyphen_values = true)]
    pub init: Option<String>,
    #[arg(long)]
    pub t: Option<f64>,
    /// Maximum Fourier mode of the stored field.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of table points.
    #[arg(long)]
    pub points: Option<usize>,
}
