use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use balgraph::generators::{CorpusMode, CorpusSpec, Filter};
use balgraph::Limits;

#[derive(Debug, Parser)]
#[command(name = "balgraph", version, about = "Balanced and balanceable bipartite graph toolkit")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Vertex cap for hole-based searches.
    #[arg(long, global = true)]
    pub guard_n: Option<usize>,
    /// Co-tree rank cap for the enumerative signing search.
    #[arg(long, global = true)]
    pub guard_cotree: Option<usize>,
    /// Omit the timestamp so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Write JSON lines (or graphs, for `generate`) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for random corpora; overrides the spec file.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Also write a DOT drawing with the witness highlighted.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
}

impl Global {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::DEFAULT;
        if let Some(n) = self.guard_n {
            l.hole_vertices = n;
        }
        if let Some(r) = self.guard_cotree {
            l.cotree_rank = r;
        }
        l
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report every balance property of each input graph.
    Check(CheckArgs),
    /// Decompose by star cutsets, 2-joins and 6-joins.
    Decompose(DecomposeArgs),
    /// Run theorem or lemma checks over a corpus.
    Verify(VerifyArgs),
    /// Extract a single kind of witness.
    Witness(WitnessArgs),
    /// Emit a corpus or a named graph as an edge-list stream.
    Generate(GenerateArgs),
}

/// An edge-list file, a `.csv` signed matrix, or `@NAME` for a built-in graph.
#[derive(Debug, Args)]
pub struct CheckArgs {
    pub input: String,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Required unless resuming from `--state`.
    pub input: Option<String>,
    /// Decompose the blocks again until every leaf is basic or R10.
    #[arg(long)]
    pub recursive: bool,
    #[arg(long, default_value_t = 16)]
    pub max_depth: usize,
    /// Work queue persisted after every node; resumed when it exists.
    #[arg(long)]
    pub state: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    OddWheel,
    #[value(name = "odd-3pc")]
    Odd3pc,
    Twins,
    NonUniqueChord,
    StarCutset,
    DoubleStar,
    #[value(name = "1join")]
    OneJoin,
    #[value(name = "2join")]
    TwoJoin,
    #[value(name = "6join")]
    SixJoin,
    Signing,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    pub input: String,
    #[arg(value_enum)]
    pub kind: WitnessKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Balanced,
    Balanceable,
    #[value(name = "4hole-free")]
    FourHoleFree,
    Cubic,
    #[value(name = "2-connected")]
    TwoConnected,
    NotR10,
    NotStronglyBalanceable,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::Balanced => Filter::Balanced,
            FilterArg::Balanceable => Filter::Balanceable,
            FilterArg::FourHoleFree => Filter::FourHoleFree,
            FilterArg::Cubic => Filter::Cubic,
            FilterArg::TwoConnected => Filter::TwoConnected,
            FilterArg::NotR10 => Filter::NotR10,
            FilterArg::NotStronglyBalanceable => Filter::NotStronglyBalanceable,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Corpus specification as JSON; the flags below are ignored when given.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Graphs from a file instead of a generated corpus.
    #[arg(long, conflicts_with = "spec")]
    pub input: Option<String>,
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    #[arg(long)]
    pub random: bool,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Shorthand for `--filter 4hole-free`.
    #[arg(long)]
    pub forbid_4hole: bool,
    #[arg(long, value_enum)]
    pub filter: Vec<FilterArg>,
}

impl CorpusArgs {
    pub fn spec(&self, seed: Option<u64>) -> anyhow::Result<CorpusSpec> {
        let mut spec = match &self.spec {
            Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
            None => {
                let mut filters: Vec<Filter> = self.filter.iter().map(|&f| f.into()).collect();
                if self.forbid_4hole && !filters.contains(&Filter::FourHoleFree) {
                    filters.push(Filter::FourHoleFree);
                }
                let random = self.random;
                CorpusSpec {
                    mode: if random { CorpusMode::Random } else { CorpusMode::Exhaustive },
                    n_min: self.n_min.unwrap_or(if random { 11 } else { 1 }),
                    n_max: self.n_max.unwrap_or(if random { 16 } else { 8 }),
                    max_degree: self.max_degree,
                    filters,
                    count: self.count,
                    ..CorpusSpec::default()
                }
            }
        };
        if let Some(s) = seed {
            spec.seed = s;
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    #[value(name = "deg2-square")]
    Deg2Square,
    RemovableEdge,
    Main,
    Twins,
    CubicGirthPlanarity,
    Conjectures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    L1,
    L1prime,
    L2j,
    #[value(name = "6jl1")]
    SixJl1,
    Extreme,
    #[value(name = "6jl2")]
    SixJl2,
    #[value(name = "extremeStar")]
    ExtremeStar,
    ExtStarReduction,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "lemma")]
    pub theorem: Vec<TheoremArg>,
    #[arg(long, value_enum)]
    pub lemma: Vec<LemmaArg>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Where failing graphs are written; defaults to `<out>.repro`.
    #[arg(long)]
    pub repro: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Emit one built-in graph instead of a corpus.
    #[arg(long, conflicts_with_all = ["spec", "input"])]
    pub named: Option<String>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
}
