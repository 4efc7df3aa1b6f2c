use std::collections::VecDeque;

use crate::graph::DisambGraph;

use super::{CentralityScores, Measure};

/// Closeness from incoming distances, rescaled by the reachable fraction.
///
/// For node `i`, let `R` be the nodes with a directed path to `i` and
/// `r = |R|`. The score is `(r / (n − 1)) · (r / Σ_{j∈R} d(j, i))`, or 0
/// when `r = 0`. On a strongly connected graph this is `(n − 1) / Σ d(j, i)`.
pub fn closeness(g: &DisambGraph) -> CentralityScores {
    let n = g.node_count();
    let mut scores = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);

    for (i, score) in scores.iter_mut().enumerate() {
        dist.fill(usize::MAX);
        dist[i] = 0;
        queue.push_back(i);
        let mut reached = 0usize;
        let mut total = 0usize;
        // BFS over reversed edges gives d(j, i)
        while let Some(v) = queue.pop_front() {
            for &u in g.in_neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    reached += 1;
                    total += dist[u];
                    queue.push_back(u);
                }
            }
        }
        if reached > 0 {
            let r = reached as f64;
            *score = (r / (n - 1) as f64) * (r / total as f64);
        }
    }

    CentralityScores::exact(Measure::Closeness, scores)
}
