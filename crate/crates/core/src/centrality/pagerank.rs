use crate::graph::DisambGraph;

use super::{l1_distance, CentralityScores, IterativeConfig, Measure};

/// Damped PageRank by power iteration.
///
/// `score_i = (1 − d)/n + d · (Σ_{j→i} score_j / outdeg(j) + dangling/n)`,
/// where `dangling` is the total score of nodes without out-links. With
/// `d = 1` this is the undamped recurrence. Starts from the uniform vector.
pub fn pagerank(g: &DisambGraph, cfg: &IterativeConfig) -> CentralityScores {
    let n = g.node_count();
    if n == 0 {
        return CentralityScores {
            measure: Measure::PageRank,
            scores: Vec::new(),
            iterations_used: Some(0),
            last_delta: Some(0.0),
            converged: true,
        };
    }

    let nf = n as f64;
    let d = cfg.damping;
    let teleport = (1.0 - d) / nf;
    let out_degree: Vec<f64> = (0..n).map(|i| g.out_degree(i) as f64).collect();

    let mut rank = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    let mut delta = f64::INFINITY;
    let mut iterations = 0;

    while iterations < cfg.max_iterations {
        iterations += 1;
        let dangling: f64 = (0..n)
            .filter(|&j| out_degree[j] == 0.0)
            .map(|j| rank[j])
            .sum();
        let base = teleport + d * dangling / nf;
        for (i, r) in next.iter_mut().enumerate() {
            let inflow: f64 = g
                .in_neighbors(i)
                .iter()
                .map(|&j| rank[j] / out_degree[j])
                .sum();
            *r = base + d * inflow;
        }
        delta = l1_distance(&next, &rank);
        std::mem::swap(&mut rank, &mut next);
        if delta < cfg.tolerance {
            break;
        }
    }

    CentralityScores {
        measure: Measure::PageRank,
        scores: rank,
        iterations_used: Some(iterations),
        last_delta: Some(delta),
        converged: delta < cfg.tolerance,
    }
}
