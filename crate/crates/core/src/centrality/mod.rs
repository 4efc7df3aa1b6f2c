//! Node centrality over a [`DisambGraph`].
//!
//! | measure     | score of node `i`                                            |
//! |-------------|--------------------------------------------------------------|
//! | degree      | in-degree / (n − 1)                                          |
//! | hits        | authority value, L1-normalized power iteration               |
//! | pagerank    | damped PageRank, uniform teleport and dangling redistribution|
//! | betweenness | Σ σ_st(i) / σ_st over ordered pairs s ≠ i ≠ t (unnormalized) |
//! | closeness   | (r / (n − 1)) · (r / Σ_{j reaches i} d(j, i))                |
//!
//! All measures treat the graph as directed and unweighted.

mod betweenness;
mod closeness;
mod degree;
mod hits;
mod pagerank;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DisambGraph;

pub use betweenness::betweenness;
pub use closeness::closeness;
pub use degree::degree;
pub use hits::hits;
pub use pagerank::pagerank;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Degree,
    Hits,
    PageRank,
    Betweenness,
    Closeness,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Hits,
        Measure::Degree,
        Measure::PageRank,
        Measure::Betweenness,
        Measure::Closeness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Hits => "hits",
            Measure::PageRank => "pagerank",
            Measure::Betweenness => "betweenness",
            Measure::Closeness => "closeness",
        }
    }

    pub fn is_iterative(self) -> bool {
        matches!(self, Measure::Hits | Measure::PageRank)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::argument(format!("unknown centrality measure {s:?}")))
    }
}

/// Stopping rule and damping for the iterative measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterativeConfig {
    /// Stop once the L1 change between successive iterates is below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// PageRank damping factor, in (0, 1].
    pub damping: f64,
}

impl Default for IterativeConfig {
    fn default() -> Self {
        IterativeConfig {
            tolerance: 1e-8,
            max_iterations: 100,
            damping: 0.85,
        }
    }
}

impl IterativeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::argument(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::argument("max iterations must be at least 1"));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::argument(format!(
                "damping must be in (0, 1], got {}",
                self.damping
            )));
        }
        Ok(())
    }
}

/// One score per graph node, indexed like [`DisambGraph::nodes`].
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityScores {
    pub measure: Measure,
    pub scores: Vec<f64>,
    /// Iterations run (iterative measures only).
    pub iterations_used: Option<usize>,
    /// L1 change of the last iteration (iterative measures only).
    pub last_delta: Option<f64>,
    /// Always true for the exact measures.
    pub converged: bool,
}

impl CentralityScores {
    fn exact(measure: Measure, scores: Vec<f64>) -> Self {
        CentralityScores {
            measure,
            scores,
            iterations_used: None,
            last_delta: None,
            converged: true,
        }
    }
}

pub fn score(g: &DisambGraph, measure: Measure, cfg: &IterativeConfig) -> CentralityScores {
    match measure {
        Measure::Degree => degree(g),
        Measure::Hits => hits(g, cfg),
        Measure::PageRank => pagerank(g, cfg),
        Measure::Betweenness => betweenness(g),
        Measure::Closeness => closeness(g),
    }
}

/// [`score`] with the measure given by name.
pub fn score_by_name(g: &DisambGraph, measure: &str, cfg: &IterativeConfig) -> Result<CentralityScores> {
    Ok(score(g, measure.parse()?, cfg))
}

fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn normalize_l1(v: &mut [f64]) {
    let sum: f64 = v.iter().sum();
    if sum > 0.0 {
        v.iter_mut().for_each(|x| *x /= sum);
    }
}
