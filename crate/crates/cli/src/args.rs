use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "centilink", about = "Popularity-pruned, centrality-reranked entity linking")]
pub struct Cli {
    /// Flat `key = value` settings file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build mention and link dictionaries from page-record corpus shards.
    BuildDict(BuildDictArgs),
    /// Link the mentions of each document in a JSONL file.
    Link(LinkArgs),
    /// Score linking methods against gold datasets.
    Evaluate(EvaluateArgs),
    /// Time centrality measures on random graphs.
    Bench(BenchArgs),
}

/// Settings that may also come from `--config`.
#[derive(Debug, Clone, Default, Args)]
pub struct Tuning {
    /// Directory holding mentions.tsv and links.tsv.
    #[arg(long, value_name = "PATH")]
    pub dict_dir: Option<PathBuf>,
    /// Candidates kept per mention [default: 3].
    #[arg(long)]
    pub top_x: Option<usize>,
    /// PageRank damping factor [default: 0.85].
    #[arg(long)]
    pub damping: Option<f64>,
    /// L1 convergence tolerance for HITS and PageRank [default: 1e-8].
    #[arg(long)]
    pub tol: Option<f64>,
    /// Iteration cap for HITS and PageRank [default: 100].
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Documents processed in parallel [default: 1].
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BuildDictArgs {
    /// Corpus shard(s); shards are parsed in parallel and merged in order.
    #[arg(long, required = true, num_args = 1.., value_name = "PATH")]
    pub corpus: Vec<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub out_dir: PathBuf,
    /// Drop outlinks whose target is not a page title in the corpus.
    #[arg(long)]
    pub strict_targets: bool,
    /// Shards parsed concurrently [default: 1].
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    #[command(flatten)]
    pub tuning: Tuning,
    /// Documents as JSONL: {"id": ..., "mentions": [{"surface": ...}]}.
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    /// degree, hits, pagerank, betweenness, closeness or popularity [default: degree].
    #[arg(long)]
    pub measure: Option<String>,
    /// Decisions file (JSONL); standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Write every document's disambiguation graph in DOT format.
    #[arg(long, value_name = "PATH")]
    pub dump_graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub tuning: Tuning,
    /// Gold dataset(s) as JSONL; each is named after its file stem.
    #[arg(long, required = true, num_args = 1.., value_name = "PATH")]
    pub dataset: Vec<PathBuf>,
    /// A method name or `all` [default: all].
    #[arg(long)]
    pub measure: Option<String>,
    /// overall, disambiguation or both [default: both].
    #[arg(long)]
    pub mode: Option<String>,
    /// Report file; `.md` selects Markdown, anything else TSV. Standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
    /// In disambiguation mode, score on the full document graph instead of
    /// rebuilding it from the retained mentions.
    #[arg(long)]
    pub dis_keep_graph: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// A centrality measure or `all` [default: all].
    #[arg(long)]
    pub measure: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub nodes: usize,
    /// Graphs timed per measure.
    #[arg(long, default_value_t = 20)]
    pub graphs: usize,
    /// Edge probability of the random graphs.
    #[arg(long, default_value_t = 0.05)]
    pub density: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long)]
    pub damping: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_iter: Option<usize>,
}
