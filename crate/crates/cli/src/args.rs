use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tropcount",
    version,
    about = "Count plane tropical curves through points via lattice paths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count curves of a given degree with one of the pipelines.
    Count(CountArgs),
    /// List lattice paths with their multiplicities.
    Paths(PathsArgs),
    /// Draw the subdivision of one path as SVG.
    Render(RenderArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    /// Rational curves.
    #[value(name = "ntrop")]
    Ntrop,
    /// Elliptic curves with very large j-invariant.
    #[value(name = "large_j")]
    LargeJ,
    /// Elliptic curves with very small j-invariant.
    #[value(name = "small_j")]
    SmallJ,
    /// Rational curves from the accelerated formula.
    #[value(name = "corollary")]
    Corollary,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Ntrop => "ntrop",
            Pipeline::LargeJ => "large_j",
            Pipeline::SmallJ => "small_j",
            Pipeline::Corollary => "corollary",
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(short, long)]
    pub degree: u32,
    #[arg(long, value_enum, default_value = "ntrop")]
    pub pipeline: Pipeline,
    #[arg(long)]
    pub json: bool,
    /// Evaluate every pipeline and fail unless they agree.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[arg(short, long)]
    pub degree: u32,
    /// Only paths with a step of lattice length at least 2.
    #[arg(long)]
    pub big_steps_only: bool,
    /// Include paths that no curve is dual to.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(short, long)]
    pub degree: u32,
    /// Index into the path enumeration, as printed by `paths`.
    #[arg(long)]
    pub path_id: usize,
    /// Which of the path's subdivisions to draw.
    #[arg(long, default_value_t = 0)]
    pub subdivision: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pick,
    Walls,
    Oracles,
    Factors,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(short, long, default_value_t = 4)]
    pub degree: u32,
    #[arg(long, default_value_t = 1000)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
