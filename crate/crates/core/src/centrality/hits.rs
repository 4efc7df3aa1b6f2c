use crate::graph::DisambGraph;

use super::{l1_distance, normalize_l1, CentralityScores, IterativeConfig, Measure};

/// HITS authority scores.
///
/// Hubs start uniform. Each iteration sets every authority to the sum of the
/// hub scores pointing at it, then every hub to the sum of the authorities it
/// points at; both vectors are L1-normalized after their update. Stops when
/// the authority vector moves less than `cfg.tolerance` in L1.
pub fn hits(g: &DisambGraph, cfg: &IterativeConfig) -> CentralityScores {
    let n = g.node_count();
    if n == 0 || g.edge_count() == 0 {
        return CentralityScores {
            measure: Measure::Hits,
            scores: vec![0.0; n],
            iterations_used: Some(usize::from(n > 0)),
            last_delta: Some(0.0),
            converged: true,
        };
    }

    let mut hub = vec![1.0 / n as f64; n];
    let mut auth = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut delta = f64::INFINITY;
    let mut iterations = 0;

    while iterations < cfg.max_iterations {
        iterations += 1;
        for (i, a) in next.iter_mut().enumerate() {
            *a = g.in_neighbors(i).iter().map(|&j| hub[j]).sum();
        }
        normalize_l1(&mut next);
        for (i, h) in hub.iter_mut().enumerate() {
            *h = g.out_neighbors(i).iter().map(|&j| next[j]).sum();
        }
        normalize_l1(&mut hub);

        delta = l1_distance(&next, &auth);
        std::mem::swap(&mut auth, &mut next);
        if delta < cfg.tolerance {
            break;
        }
    }

    CentralityScores {
        measure: Measure::Hits,
        scores: auth,
        iterations_used: Some(iterations),
        last_delta: Some(delta),
        converged: delta < cfg.tolerance,
    }
}
