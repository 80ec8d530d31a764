use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "geocover",
    version,
    about = "Exact metric geodesic cover numbers of finite multigraphs",
    after_help = "Exit status: 0 success, 1 negative verdict, 2 bad input, 3 budget exhausted, \
                  4 disagreement with the published tables."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Geodesic cover number with one witness cover and weighting.
    Number(SolveArgs),
    /// One witness per distinct optimal cover (up to symmetry and rerouting).
    Distinct(SolveArgs),
    /// Decide whether the paths of a cover can all be geodesics.
    Feasible(FeasibleArgs),
    /// Compatible orientations of two paths, with a metric realizing them.
    Classify2(SystemArgs),
    /// Geodesibility class of three paths.
    Classify3(SystemArgs),
    /// Machine check of the three-path configuration lists.
    AppendixB(AppendixArgs),
    /// DOT drawing of a graph's 2-subdivision, optionally with a cover.
    ExportDot(ExportArgs),
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph file: JSON with `vertices` (names) and `edges` (pairs of names or indices).
    #[arg(
        long,
        value_name = "FILE",
        conflicts_with = "std",
        required_unless_present = "std"
    )]
    pub graph: Option<PathBuf>,
    /// Standard graph by name and integer parameters, e.g. `--std complete_bipartite 3 3`.
    /// Names: complete, complete_bipartite, star, path, cycle, caterpillar, sawtooth, loops.
    #[arg(long = "std", num_args = 1.., value_name = "NAME PARAMS", allow_negative_numbers = true)]
    pub std: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct Budgets {
    /// Cover search node budget.
    #[arg(long, env = "GEOCOVER_NODES", value_parser = clap::value_parser!(u64).range(1..))]
    pub nodes: Option<u64>,
    /// Simplex pivot budget per linear program.
    #[arg(long, env = "GEOCOVER_PIVOTS", value_parser = positive)]
    pub pivots: Option<usize>,
    /// Cap on the number of enumerated simple paths.
    #[arg(long, env = "GEOCOVER_POOL_CAP", value_parser = positive)]
    pub pool_cap: Option<usize>,
    /// Cap on covers visited while exploring reroutings.
    #[arg(long, env = "GEOCOVER_REROUTES", value_parser = positive)]
    pub reroutes: Option<usize>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub budgets: Budgets,
    /// Force every edge to have length 1.
    #[arg(long)]
    pub unweighted: bool,
    /// Give up beyond this many paths and report the bracketing interval.
    #[arg(long, value_parser = positive)]
    pub max_size: Option<usize>,
    /// Test every candidate cover instead of one per symmetry orbit.
    #[arg(long)]
    pub no_symmetry: bool,
    /// In the census, keep covers that differ only by rerouting.
    #[arg(long)]
    pub no_rerouting: bool,
    /// Do not skip path pairs whose shared vertices occur in conflicting orders.
    #[arg(long)]
    pub no_pair_filter: bool,
    /// Prune covers where a path ends in the interior of another path.
    #[arg(long)]
    pub endpoint_filter: bool,
    /// Rescale witness weights so the smallest segment weight is 1.
    #[arg(long)]
    pub normalize: bool,
    /// Report wall-clock time (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Write the first witness cover to this file.
    #[arg(long, value_name = "FILE")]
    pub write_cover: Option<PathBuf>,
    /// Write the first witness weighting to this file.
    #[arg(long, value_name = "FILE")]
    pub write_weights: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FeasibleArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Cover file: JSON `{"paths": [[vertex names of the 2-subdivision], ...]}`.
    #[arg(long, value_name = "FILE")]
    pub cover: PathBuf,
    /// Check a given weighting instead of solving: `unit`, or a JSON file
    /// mapping segment names to rationals.
    #[arg(long, value_name = "WEIGHTS")]
    pub check_weights: Option<String>,
    /// Cap on the number of enumerated simple paths.
    #[arg(long, env = "GEOCOVER_POOL_CAP", value_parser = positive)]
    pub pool_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// One path as comma-separated point labels, e.g. `--path p,q,r`; repeat per path.
    #[arg(long = "path", value_name = "LABELS", required = true)]
    pub paths: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AppendixArgs {
    /// Which configuration group to enumerate.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub group: u8,
    /// Compare with the published admissible sets; exit 4 on disagreement.
    #[arg(long)]
    pub diff_paper: bool,
    /// Only the configurations with all points distinct.
    #[arg(long)]
    pub distinct_only: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Cover whose paths are drawn in colour.
    #[arg(long, value_name = "FILE")]
    pub cover: Option<PathBuf>,
}
