use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::range::KRange;

#[derive(Debug, Parser)]
#[command(
    name = "ktwist",
    version,
    about = "Cyclic orders and Tor computations for twisted K-theory of compact Lie groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit CSV rows instead of a JSON report.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Single-line JSON.
    #[arg(long, global = true)]
    pub compact: bool,

    /// Report elapsed_ms as 0 so that output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cyclic order c(G, k) for one level or a range of levels.
    Order(OrderArgs),
    /// Integer homology of a preset or custom Tate complex.
    Tor(TorArgs),
    /// Spin^c characteristic numbers over a range of twists.
    Spinc(SpincArgs),
    /// Every cross-check route over a grid of groups and levels.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// SU, Sp, SpinOdd, SpinEven, G2, F4, E6, E7 or E8.
    pub family: String,
    /// Family parameter: SU(n+1), Sp(n), Spin(2m+1), Spin(2m+2); defaults to the rank for exceptional groups.
    pub parameter: Option<u32>,
    /// Level `k` or inclusive range `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: KRange,
    /// Report every route and whether they agree.
    #[arg(long)]
    pub all_routes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum X3Arg {
    Binomial,
    Dropped,
}

#[derive(Debug, Args)]
pub struct TorArgs {
    /// koszul, g2, f4core, e7core, e7rejected, e8core, spinR3 or spinR4.
    #[arg(required_unless_present = "spec_file", conflicts_with = "spec_file")]
    pub preset: Option<String>,
    /// TOML file describing a custom complex.
    #[arg(long)]
    pub spec_file: Option<PathBuf>,
    /// Twisting level for lettered presets.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Comma-separated images for the koszul preset.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Option<Vec<i64>>,
    /// Degree bound; homology is reported in degrees below it.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Image of the g2 generator x3: binomial (default) or dropped.
    #[arg(long, value_enum, conflicts_with = "x3_value")]
    pub x3: Option<X3Arg>,
    /// Explicit integer image of the g2 generator x3.
    #[arg(long, allow_hyphen_values = true)]
    pub x3_value: Option<i64>,
    /// Use highest-index monomial assignment when splitting relations.
    #[arg(long)]
    pub highest: bool,
}

#[derive(Debug, Args)]
pub struct SpincArgs {
    /// Inclusive range of nonnegative twists.
    #[arg(long)]
    pub k_range: KRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    OffByOneBinomial,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k_max: i64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub rank_max: u32,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}
