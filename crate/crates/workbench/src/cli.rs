//! Command-line definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ramsey-workbench", version, about = "Cycle-versus-fan Ramsey workbench")]
pub struct Cli {
    /// Print the JSON report on stdout instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit wall-clock timing from reports so identical runs are byte-identical.
    #[arg(long, global = true)]
    pub stable_output: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a lower-bound coloring and write it as a RAMSEY-COLORING v1 file.
    Construct(ConstructArgs),
    /// Certify that a coloring has no red C_m and no blue F_n.
    Verify(VerifyArgs),
    /// Run a single detector on a graph.
    Detect(DetectArgs),
    /// Exhaustive and sampled Ramsey searches.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Lemma and theorem checkers.
    #[command(subcommand)]
    Lemma(LemmaCommand),
    /// Lower bounds against the asymptotic main term.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: String,
    /// Cycle ratio as P/Q (not used by w5).
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_name = "PATH")]
    pub coloring: PathBuf,
    #[arg(long)]
    pub cycle: usize,
    #[arg(long)]
    pub fan: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DetectKind {
    Cycle,
    Fan,
    Cmatching,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[arg(value_enum)]
    pub kind: DetectKind,
    #[arg(long, value_name = "PATH")]
    pub graph: PathBuf,
    /// Look for a cycle of exactly this length.
    #[arg(long)]
    pub length: Option<usize>,
    /// Look for a fan with this many blades.
    #[arg(long)]
    pub blades: Option<usize>,
    /// Allow a heuristic lower bound when a block is too large for the exact circumference.
    #[arg(long)]
    pub heuristic: bool,
}

#[derive(Debug, Args)]
pub struct Workers {
    /// Worker threads.
    #[arg(long, env = "RAMSEY_WORKBENCH_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct SearchTuning {
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
    /// Disable symmetry pruning.
    #[arg(long)]
    pub no_symmetry: bool,
    /// Number of vertices fixed per task.
    #[arg(long, default_value_t = ramsey_core::search::DEFAULT_SPLIT_DEPTH)]
    pub split_depth: usize,
    /// Where to write the frontier when the budget runs out.
    #[arg(long, value_name = "PATH", default_value = "ramsey-search.checkpoint.json")]
    pub checkpoint: PathBuf,
    /// Continue from a checkpoint.
    #[arg(long, value_name = "PATH")]
    pub resume: Option<PathBuf>,
    #[command(flatten)]
    pub workers: Workers,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Does every coloring of K_N contain a red C_m or a blue F_n?
    Arrows {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycle: usize,
        #[arg(long)]
        fan: usize,
        #[command(flatten)]
        tuning: SearchTuning,
    },
    /// Smallest arrowing N up to a limit.
    Exact {
        #[arg(long)]
        cycle: usize,
        #[arg(long)]
        fan: usize,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        tuning: SearchTuning,
    },
    /// Sample (or enumerate) colorings and count the ones containing a target.
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycle: usize,
        #[arg(long)]
        fan: usize,
        #[arg(long, conflicts_with = "exhaustive")]
        samples: Option<u64>,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    PartI,
    PartIi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HarnessKind {
    Component,
    FigajLuczak,
    Dirac,
    Bondy,
    Chain,
}

#[derive(Debug, Subcommand)]
pub enum LemmaCommand {
    /// Monochromatic component larger than the minimum degree.
    Component {
        /// Coloring of a complete host graph.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["host", "red"])]
        coloring: Option<PathBuf>,
        /// Host graph (graph6); its edges outside --red are blue.
        #[arg(long, value_name = "PATH", requires = "red")]
        host: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        red: Option<PathBuf>,
    },
    /// Large component with a large matching in a dense bipartite graph.
    Bimatch {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        /// Comma-separated vertices of the larger part; default: a bipartition of the graph.
        #[arg(long)]
        part1: Option<String>,
        #[arg(long)]
        eps: String,
    },
    /// Star versus two matchings, by exhaustive 3-coloring search.
    Starmatch {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        n2: u64,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Circumference at least min(2δ, n) for 2-connected graphs.
    Dirac {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
    },
    /// Pancyclicity of graphs with δ >= n/2.
    Bondy {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
    },
    /// 2-connectivity, circumference and connected matching implications.
    Chain {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
    },
    /// Evaluate the reduced-graph claim thresholds on a concrete coloring.
    Claims {
        #[arg(long, value_name = "PATH", conflicts_with_all = ["red", "blue"])]
        coloring: Option<PathBuf>,
        #[arg(long, value_name = "PATH", requires = "blue")]
        red: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        blue: Option<PathBuf>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        beta: String,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        /// Maximum number of absent pairs per vertex; default: no cap.
        #[arg(long)]
        defect_cap: Option<usize>,
    },
    /// Randomized harness over seeded instances.
    Harness {
        #[arg(long, value_enum)]
        kind: HarnessKind,
        #[arg(long, default_value_t = 500)]
        instances: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest instance order (part size for figaj-luczak).
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Directory for violating instances.
        #[arg(long, value_name = "DIR")]
        artifacts: Option<PathBuf>,
        #[command(flatten)]
        workers: Workers,
    },
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Comma-separated ratios P/Q.
    #[arg(long, allow_hyphen_values = true)]
    pub a_list: String,
    #[arg(long)]
    pub n: u64,
}
