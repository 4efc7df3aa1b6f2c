//! Entity linking by popularity pruning and graph-centrality re-ranking.
//!
//! The pipeline has four stages:
//!
//! 1. [`ingest`] streams a knowledge-base link corpus (one record per page with
//!    its anchor/target outlinks) into a mention→entity dictionary and an
//!    entity→entity link index.
//! 2. [`candidates`] turns the mention dictionary into a popularity prior
//!    `p(e | m)` and keeps the top-x candidates of every mention.
//! 3. [`graph`] connects the retained candidates of one document through the
//!    link index, giving a directed disambiguation graph.
//! 4. [`centrality`] scores every node (degree, HITS, PageRank, betweenness,
//!    closeness) and [`linker`] picks, per mention, the best-scoring candidate,
//!    falling back to popularity on ties.
//!
//! [`eval`] runs the pipeline over gold datasets and reports micro-averaged
//! accuracy, precision, recall and F1 in overall and disambiguation modes.

pub mod candidates;
pub mod centrality;
pub mod dict;
pub mod error;
pub mod eval;
pub mod graph;
pub mod ingest;
pub mod linker;
pub mod synth;
pub mod text;

#[cfg(any(test, feature = "oracles"))]
pub mod oracles;

pub use candidates::{popularity_scores, top_x, Candidate, DEFAULT_TOP_X};
pub use centrality::{CentralityScores, IterativeConfig, Measure};
pub use dict::{EntityCount, EntityLinkIndex, MentionEntityDict, DICT_FORMAT_VERSION};
pub use error::{Error, Result};
pub use eval::{EvalReport, EvalRow, GoldDataset, Mode};
pub use graph::DisambGraph;
pub use ingest::{CorpusReader, CorpusStats, RawPage};
pub use linker::{Document, LinkDecision, Linker, LinkerConfig, Mention, Method};
pub use text::normalize_mention;
