use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Analyses of theorem-dependency networks and Boolean statement spaces.
#[derive(Debug, Parser)]
#[command(name = "theoremnet", version, propagate_version = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized helpers (`corpus synth`); analyses ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct CorpusArg {
    /// Dependency corpus (edge list or JSON).
    pub corpus: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load, check, convert or generate corpora.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Degree, popularity and axiom-dependence statistics.
    #[command(subcommand)]
    Stats(StatsCmd),
    /// Direct references of one node, with multiplicities.
    Deps {
        #[command(flatten)]
        input: CorpusArg,
        id: String,
    },
    /// Past or future cone of a node.
    Cone(ConeArgs),
    /// Longest chains from each axiom up to a node.
    Chains {
        #[command(flatten)]
        input: CorpusArg,
        id: String,
    },
    /// Slice table of the rest-frame (or a custom) foliation.
    Foliate {
        #[command(flatten)]
        input: CorpusArg,
        /// `node,layer` CSV to use instead of the rest frame.
        #[arg(long)]
        custom: Option<PathBuf>,
        /// Print the node-to-layer mapping instead of slice counts.
        #[arg(long)]
        layers: bool,
    },
    /// Branchial graph of one slice.
    Branchial {
        #[command(flatten)]
        input: CorpusArg,
        #[arg(long)]
        slice: usize,
        #[arg(long, default_value_t = 1)]
        dt: usize,
        #[arg(long)]
        custom: Option<PathBuf>,
        /// Count common ancestors reached through earlier slices too.
        #[arg(long)]
        any_path: bool,
    },
    /// Ball growth around the axioms or around every node.
    Growth(GrowthArgs),
    /// Growth-exponent dimension estimates.
    Dimension(GrowthArgs),
    /// Unfolded proof sizes: `compile <corpus> <id>` or `compile <corpus> rank`.
    Compile {
        #[command(flatten)]
        input: CorpusArg,
        /// Node id, or `rank` for the ranking of all theorems.
        target: String,
        #[arg(long, value_enum, default_value_t = RankMetric::Leaves)]
        metric: RankMetric,
        #[arg(long)]
        top: Option<usize>,
    },
    /// Promote theorems to axioms and measure the savings.
    #[command(subcommand)]
    Superaxiom(SuperaxiomCmd),
    /// Read Metamath databases.
    #[command(subcommand)]
    Metamath(MetamathCmd),
    /// Enumerate and analyse Boolean equations.
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Group-level (book) aggregate graph.
    Books {
        #[command(flatten)]
        input: CorpusArg,
        /// List groups instead of group-to-group edges.
        #[arg(long)]
        groups: bool,
    },
    /// Edge counts of the transitive reduction and closure.
    Reduce {
        #[command(flatten)]
        input: CorpusArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    /// Counts plus soft-invariant diagnostics.
    Validate {
        #[command(flatten)]
        input: CorpusArg,
    },
    /// Re-serialise: text gives the edge list, csv the edge table.
    Export {
        #[command(flatten)]
        input: CorpusArg,
        /// Square adjacency matrix (csv) instead of the edge table.
        #[arg(long)]
        matrix: bool,
    },
    /// Random locality-biased corpus for scale experiments.
    Synth {
        #[arg(long, default_value_t = 44_000)]
        nodes: usize,
        #[arg(long, default_value_t = 20)]
        axioms: usize,
        /// References per theorem.
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PopularityMode {
    /// Distinct citing proofs.
    Direct,
    /// Citations counted with multiplicity.
    Weighted,
    /// Future-cone size.
    Indirect,
}

#[derive(Debug, Subcommand)]
pub enum StatsCmd {
    Degrees {
        #[command(flatten)]
        input: CorpusArg,
    },
    Popularity {
        #[command(flatten)]
        input: CorpusArg,
        #[arg(long, value_enum, default_value_t = PopularityMode::Direct)]
        mode: PopularityMode,
        #[arg(long)]
        top: Option<usize>,
    },
    AxiomSubsets {
        #[command(flatten)]
        input: CorpusArg,
    },
    /// Future-cone size and non-dependents of each axiom.
    NonDependents {
        #[command(flatten)]
        input: CorpusArg,
        /// Restrict to one axiom.
        axiom: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConeDirection {
    Past,
    Future,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[arg(value_enum)]
    pub direction: ConeDirection,
    #[command(flatten)]
    pub input: CorpusArg,
    pub id: String,
    /// Induced edges taken from the transitive reduction.
    #[arg(long, conflicts_with = "closure")]
    pub reduce: bool,
    /// Induced edges taken from the transitive closure.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GrowthFrom {
    Axioms,
    All,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub input: CorpusArg,
    #[arg(long, value_enum, default_value_t = GrowthFrom::Axioms)]
    pub from: GrowthFrom,
    /// Grow on the transitive reduction.
    #[arg(long)]
    pub reduced: bool,
    /// With `--from all`, follow edges only toward dependents.
    #[arg(long)]
    pub directed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RankMetric {
    /// Axiom-sequence length.
    Leaves,
    /// Node count of the unfolded proof tree.
    Steps,
}

#[derive(Debug, Subcommand)]
pub enum SuperaxiomCmd {
    /// Shortening and depth reduction for every candidate.
    Scan {
        #[command(flatten)]
        input: CorpusArg,
        /// Keep the best candidates by average shortening.
        #[arg(long)]
        top: Option<usize>,
    },
    /// Promote the given theorems; report on one target or on all theorems.
    Apply {
        #[command(flatten)]
        input: CorpusArg,
        #[arg(required = true)]
        ids: Vec<String>,
        /// Compare the past cone of this theorem before and after.
        #[arg(long)]
        target: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MetamathCmd {
    /// Dependency corpus of a `.mm` database.
    Extract {
        file: PathBuf,
        /// Keep syntax constructors as nodes.
        #[arg(long)]
        include_syntax: bool,
        /// Print counts instead of the corpus.
        #[arg(long)]
        summary: bool,
    },
}

#[derive(Debug, Args)]
pub struct Bound {
    /// Alphabet size: the first N letters.
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
    /// Maximum depth of each side.
    #[arg(long, default_value_t = 2)]
    pub depth: u32,
    /// Maximum symbol count of each side.
    #[arg(long, default_value_t = 4)]
    pub symbols: usize,
}

#[derive(Debug, Subcommand)]
pub enum LogicCmd {
    /// Canonical equations in complexity order.
    Enum {
        #[command(flatten)]
        bound: Bound,
        #[arg(long)]
        limit: Option<usize>,
        /// Render with ¬ ∧ ∨.
        #[arg(long)]
        unicode: bool,
    },
    /// Tautology counts per complexity level.
    Census {
        #[command(flatten)]
        bound: Bound,
        /// List every equation with its verdict.
        #[arg(long)]
        list: bool,
    },
    /// Satisfying assignments of an equation.
    Sat {
        equation: String,
        /// Variable letters in column order; defaults to those used, sorted.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Which statements each statement implies.
    Implications {
        #[command(flatten)]
        bound: Bound,
        /// Universe size taken from the head of the enumeration.
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Explicit universe (overrides the enumeration).
        #[arg(long = "statement")]
        statements: Vec<String>,
    },
    /// Multiway rewriting graph under the Boolean-algebra axioms.
    Multiway {
        #[arg(default_value = "x&y")]
        seed_expr: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        max_vertices: usize,
    },
}
