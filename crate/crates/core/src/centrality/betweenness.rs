use std::collections::VecDeque;

use crate::graph::DisambGraph;

use super::{CentralityScores, Measure};

/// Exact unnormalized betweenness for a directed unweighted graph (Brandes).
///
/// One BFS per source counts shortest paths (`sigma`) and records
/// predecessors; dependencies are then accumulated in reverse BFS order with
/// `delta[v] += sigma[v] / sigma[w] · (1 + delta[w])`.
pub fn betweenness(g: &DisambGraph) -> CentralityScores {
    let n = g.node_count();
    let mut scores = vec![0.0; n];

    let mut order = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        order.clear();
        preds.iter_mut().for_each(Vec::clear);
        sigma.fill(0.0);
        dist.fill(usize::MAX);
        delta.fill(0.0);

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.out_neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }

        while let Some(w) = order.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                scores[w] += delta[w];
            }
        }
    }

    CentralityScores::exact(Measure::Betweenness, scores)
}
