//! Per-document linking: candidates → graph → centrality → decision.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::candidates::{popularity_scores, top_x, Candidate, DEFAULT_TOP_X};
use crate::centrality::{self, IterativeConfig, Measure};
use crate::dict::{EntityLinkIndex, MentionEntityDict};
use crate::error::{Error, Result};
use crate::graph::DisambGraph;

/// Centrality scores closer than this are treated as tied.
pub const TIE_EPSILON: f64 = 1e-12;

/// How a mention's entity is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Most popular candidate, no graph.
    Popularity,
    Centrality(Measure),
}

impl Method {
    /// Popularity followed by every centrality measure.
    pub const ALL: [Method; 6] = [
        Method::Popularity,
        Method::Centrality(Measure::Hits),
        Method::Centrality(Measure::Degree),
        Method::Centrality(Measure::PageRank),
        Method::Centrality(Measure::Betweenness),
        Method::Centrality(Measure::Closeness),
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Popularity => "popularity",
            Method::Centrality(m) => m.as_str(),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "popularity" {
            return Ok(Method::Popularity);
        }
        s.parse().map(Method::Centrality).map_err(|_| {
            Error::argument(format!(
                "unknown method {s:?} (expected popularity, degree, hits, pagerank, betweenness or closeness)"
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mention {
    pub surface: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gold: Option<String>,
}

impl Mention {
    pub fn new(surface: impl Into<String>) -> Self {
        Mention {
            surface: surface.into(),
            span: None,
            gold: None,
        }
    }

    pub fn with_gold(mut self, gold: impl Into<String>) -> Self {
        self.gold = Some(gold.into());
        self
    }
}

/// Ordered mentions of one document, disambiguated jointly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub mentions: Vec<Mention>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkDecision {
    pub mention: usize,
    /// `None` iff the mention has no candidate.
    pub chosen: Option<String>,
    /// Centrality of the chosen node, or its popularity for [`Method::Popularity`].
    pub score: f64,
    pub method: Method,
    /// The winner's score ties the lowest score among the mention's
    /// candidates, so popularity decided.
    pub fallback_used: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkerConfig {
    pub method: Method,
    pub top_x: usize,
    pub iterative: IterativeConfig,
}

impl Default for LinkerConfig {
    fn default() -> Self {
        LinkerConfig {
            method: Method::Centrality(Measure::Degree),
            top_x: DEFAULT_TOP_X,
            iterative: IterativeConfig::default(),
        }
    }
}

impl LinkerConfig {
    pub fn with_method(method: Method) -> Self {
        LinkerConfig {
            method,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.top_x == 0 {
            return Err(Error::argument("top-x must be at least 1"));
        }
        self.iterative.validate()
    }
}

/// Links documents against a pair of shared, read-only dictionaries.
#[derive(Debug, Clone, Copy)]
pub struct Linker<'a> {
    mentions: &'a MentionEntityDict,
    links: &'a EntityLinkIndex,
    config: LinkerConfig,
}

impl<'a> Linker<'a> {
    pub fn new(
        mentions: &'a MentionEntityDict,
        links: &'a EntityLinkIndex,
        config: LinkerConfig,
    ) -> Result<Self> {
        config.validate()?;
        Ok(Linker {
            mentions,
            links,
            config,
        })
    }

    pub fn config(&self) -> &LinkerConfig {
        &self.config
    }

    /// Top-x candidates of one surface string.
    pub fn candidates_for(&self, surface: &str) -> Vec<Candidate> {
        top_x(popularity_scores(self.mentions, surface), self.config.top_x)
            .expect("top_x validated at construction")
    }

    pub fn candidates(&self, doc: &Document) -> Vec<Vec<Candidate>> {
        doc.mentions
            .iter()
            .map(|m| self.candidates_for(&m.surface))
            .collect()
    }

    pub fn graph(&self, candidates: &[Vec<Candidate>]) -> DisambGraph {
        DisambGraph::build(candidates, self.links)
    }

    pub fn link_document(&self, doc: &Document) -> Vec<LinkDecision> {
        self.link_candidates(&self.candidates(doc))
    }

    /// Decides every mention given its (already pruned) candidate list.
    pub fn link_candidates(&self, candidates: &[Vec<Candidate>]) -> Vec<LinkDecision> {
        let method = self.config.method;
        let Method::Centrality(measure) = method else {
            return candidates
                .iter()
                .enumerate()
                .map(|(i, cands)| LinkDecision {
                    mention: i,
                    chosen: cands.first().map(|c| c.entity.clone()),
                    score: cands.first().map_or(0.0, |c| c.popularity),
                    method,
                    fallback_used: false,
                })
                .collect();
        };

        let graph = self.graph(candidates);
        let scores = centrality::score(&graph, measure, &self.config.iterative).scores;
        (0..candidates.len())
            .map(|m| decide(&graph, &scores, m, method))
            .collect()
    }
}

/// Per-mention argmax over the mention's own nodes. Nodes come in rank order,
/// i.e. by `(-count, entity)`, so the first node within [`TIE_EPSILON`] of
/// the maximum is the tie-break winner.
fn decide(graph: &DisambGraph, scores: &[f64], mention: usize, method: Method) -> LinkDecision {
    let nodes: Vec<usize> = graph.mention_nodes(mention).collect();
    if nodes.is_empty() {
        return LinkDecision {
            mention,
            chosen: None,
            score: 0.0,
            method,
            fallback_used: false,
        };
    }
    let max = nodes.iter().map(|&i| scores[i]).fold(f64::NEG_INFINITY, f64::max);
    let min = nodes.iter().map(|&i| scores[i]).fold(f64::INFINITY, f64::min);
    let winner = nodes
        .iter()
        .copied()
        .find(|&i| scores[i] >= max - TIE_EPSILON)
        .expect("max is attained");
    LinkDecision {
        mention,
        chosen: Some(graph.node(winner).entity.clone()),
        score: scores[winner],
        method,
        fallback_used: scores[winner] <= min + TIE_EPSILON,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DocumentLinks {
    pub id: String,
    pub decisions: Vec<LinkDecision>,
}

/// Links every document, in input order. `workers > 1` links documents in
/// parallel; the output does not depend on the worker count.
pub fn link_corpus(linker: &Linker<'_>, docs: &[Document], workers: usize) -> Result<Vec<DocumentLinks>> {
    let run = |doc: &Document| DocumentLinks {
        id: doc.id.clone(),
        decisions: linker.link_document(doc),
    };
    in_pool(workers, || docs.par_iter().map(run).collect())
}

/// Runs `f` on a dedicated pool of `workers` threads (inline when 1).
pub fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Err(Error::argument("worker count must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}
