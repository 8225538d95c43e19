use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sigmaclique", version, about = "Sigma clique covers and partitions of graphs")]
pub struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Worker threads for randomized trials (1 = sequential).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// key=value file pinning defaults: max_n, seed, threads.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Record wall-clock times in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve cc, cp, scc, scp or scc' exactly.
    Solve(SolveArgs),
    /// Check a cover or partition against a graph.
    Verify(VerifyArgs),
    /// Build graphs, covers and orthogonal arrays.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Evaluate closed-form bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Run the sample-and-prune randomized cover.
    RandomCover(RandomArgs),
    /// Set-pair and set-family views of covers.
    #[command(subcommand)]
    Setsys(SetsysCommand),
    /// Parameter sweeps.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Auto,
    Edges,
    Dimacs,
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph file (edge list or DIMACS).
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// cc, cp, scc, scp or scc-prime.
    #[arg(long, short)]
    pub objective: String,
    /// Refuse graphs with more vertices (at most 16).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Also write the witness in cover-file format.
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Cover file: `mode: cover|partition`, then one clique per line.
    pub cover: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GnCover {
    /// The unique covering with n+2 cliques.
    Minimum,
    /// The covering with n+4 cliques and sigma 8n+2.
    Alternative,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCommand {
    /// The graph G_n on 3n+2 vertices.
    Gn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: FormatArg,
        #[arg(long, value_enum)]
        cover: Option<GnCover>,
        #[arg(long, value_name = "FILE")]
        cover_out: Option<PathBuf>,
    },
    /// A complete multipartite graph and, when it exists, its optimal partition.
    Ktd {
        /// Number of parts of size d (ignored with --parts).
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Explicit part sizes, comma separated.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: FormatArg,
        #[arg(long, value_name = "FILE")]
        cover_out: Option<PathBuf>,
    },
    /// The orthogonal array OA(d, d+1) over GF(d).
    Oa {
        #[arg(long)]
        d: usize,
        /// Write the array as CSV with symbols 1..=d.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundsCommand {
    /// Edge-count bounds for a graph, optionally certified by exact solving.
    Graph {
        #[command(flatten)]
        input: GraphInput,
        /// Solve scc, scp and cp exactly and check every bound.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Lower and upper bounds on scc of the cocktail party graph K_t(2).
    Ctp {
        #[arg(long)]
        t: u64,
    },
    /// Ratio table of the cocktail-party bounds against t log t.
    Table {
        /// Explicit t values.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<u64>>,
        /// Powers of two from 2^FROM ...
        #[arg(long, default_value_t = 10)]
        from_exp: u32,
        /// ... to 2^TO.
        #[arg(long, default_value_t = 20)]
        to_exp: u32,
        /// Write the table as CSV ("-" for stdout instead of JSON).
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sampling probability; needs --rounds.
    #[arg(long, requires = "rounds", conflicts_with = "paper_defaults")]
    pub p: Option<f64>,
    #[arg(long, requires = "p")]
    pub rounds: Option<u64>,
    /// p = 1/d and the matching round count (the default).
    #[arg(long)]
    pub paper_defaults: bool,
    /// Keep the smallest sigma over this many independent trials.
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    #[arg(long, value_name = "FILE")]
    pub cover_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum SetsysCommand {
    /// Bollobás pairs of a covering of K_t(2) and their binomial sum.
    Certify {
        #[arg(long)]
        t: usize,
        /// Cover file over K_t(2) with x_i = 2i, y_i = 2i+1.
        cover: PathBuf,
    },
    /// Set family of a covering of K_t(d).
    Family {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        d: usize,
        cover: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Smallest family for (d, t) in the exhaustive regime.
    Minimize {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        /// Most ground elements a family may use.
        #[arg(long, default_value_t = 16)]
        ground_cap: usize,
        /// Also enumerate families directly (small cases only).
        #[arg(long)]
        enumerate: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExperimentCommand {
    /// Exact, randomized and bound values of scc(K_t(2)) over a range of t.
    Ctp {
        #[arg(long, default_value_t = 2)]
        t_from: usize,
        #[arg(long, default_value_t = 6)]
        t_to: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Randomized trials per row.
        #[arg(long, default_value_t = 20)]
        trials: u64,
        /// Largest t solved exactly.
        #[arg(long, default_value_t = 6)]
        exact_up_to: usize,
        /// Write the rows as CSV ("-" for stdout instead of JSON).
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
}
