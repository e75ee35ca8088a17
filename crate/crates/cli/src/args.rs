use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pairopt",
    version,
    about = "Locally D-optimal invariant designs for paired comparisons with partial profiles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal comparison depth or full-model design of one problem.
    Solve(SolveArgs),
    /// Regenerate one of the reference tables over its grid.
    Table(TableArgs),
    /// Brute-force cross-checks of the closed forms on a small problem.
    Verify(VerifyArgs),
    /// Enumerate every pair of one depth orbit.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ProblemArgs {
    /// Number of attributes.
    #[arg(short = 'K', long = "attributes")]
    pub attributes: usize,
    /// Attributes shown per alternative.
    #[arg(short = 'S', long = "strength")]
    pub strength: usize,
    /// Levels per attribute.
    #[arg(short = 'v', long = "levels")]
    pub levels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Main,
    FirstOrder,
    SecondOrder,
    Full,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value_t = Target::Full)]
    pub target: Target,
    /// Acceptance tolerance of the equivalence check.
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
    /// Weights below this are dropped from the support.
    #[arg(long, default_value_t = 1e-10)]
    pub weight_tolerance: f64,
    /// Decimal places of printed weights.
    #[arg(long, default_value_t = 3)]
    pub precision: u32,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Second-order depth with S = K - 1.
    #[value(name = "1")]
    SecondOrderDepth,
    /// Full-model designs.
    #[value(name = "2")]
    FullDesign,
    /// Normalized variance of full-profile designs.
    #[value(name = "4")]
    FullProfileVariance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Md,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub which: TableKind,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Maximum number of pairs to enumerate (overrides PAIROPT_CAP).
    #[arg(long)]
    pub cap: Option<u64>,
    /// Design to check instead of the solver's optimum: an export file or a
    /// weights file.
    #[arg(long)]
    pub design: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = ExportFormat::Csv)]
    pub format: ExportFormat,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Maximum number of pairs to enumerate (overrides PAIROPT_CAP).
    #[arg(long)]
    pub cap: Option<u64>,
}
