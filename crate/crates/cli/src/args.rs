use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "logcert", version, about = "Exact computation and log-behavior certification for Sun's numbers S_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print exact values of S, f or u over an index range.
    Seq(SeqArgs),
    /// Run one claim or one checker.
    Check(CheckArgs),
    /// Run the full claim registry and write a report.
    Certify(CertifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Interval,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format; inferred from the --out extension when omitted, else text.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// S, f or u.
    pub name: String,
    /// First index (defaults to the first index of the sequence).
    pub from: Option<usize>,
    /// Last index (defaults to `from + 10`).
    pub to: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Claim id (C1..C12) or checker: logconvex, logconcave, theorem21,
    /// interlacing, cgw, nthroot-increasing, nthroot-logconcave, limits.
    pub target: String,
    /// Sequence for the generic checkers: S, f, u, or s for the quotients S_n/S_(n-1).
    #[arg(long, default_value = "S")]
    pub seq: String,
    #[arg(long)]
    pub from: Option<usize>,
    #[arg(long)]
    pub to: Option<usize>,
    #[arg(long, conflicts_with = "weak")]
    pub strict: bool,
    #[arg(long)]
    pub weak: bool,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Single index for n-th root log-concavity.
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest interval precision in bits.
    #[arg(long, value_parser = clap::value_parser!(u32).range(64..=4096))]
    pub precision: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Comma-separated claim ids, e.g. C1,C11.
    #[arg(long, value_delimiter = ',')]
    pub claims: Vec<String>,
    /// Largest interval precision in bits.
    #[arg(long, value_parser = clap::value_parser!(u32).range(64..=4096))]
    pub precision: Option<u32>,
    #[arg(long)]
    pub values_to: Option<usize>,
    #[arg(long)]
    pub ratio_to: Option<usize>,
    #[arg(long)]
    pub nthroot_increasing_to: Option<usize>,
    #[arg(long)]
    pub root_exact_to: Option<usize>,
    #[arg(long)]
    pub root_to: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}
