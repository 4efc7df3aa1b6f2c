use crate::graph::DisambGraph;

use super::{CentralityScores, Measure};

/// In-degree divided by `n − 1`; 0 for a single node.
pub fn degree(g: &DisambGraph) -> CentralityScores {
    let n = g.node_count();
    let scores = (0..n)
        .map(|i| {
            if n <= 1 {
                0.0
            } else {
                g.in_degree(i) as f64 / (n - 1) as f64
            }
        })
        .collect();
    CentralityScores::exact(Measure::Degree, scores)
}
