//! Shared fixtures for the criterion benches.

use centilink_core::synth::random_digraph;
use centilink_core::DisambGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` random digraphs with `n` nodes and expected out-degree `degree`.
pub fn graphs(n: usize, degree: f64, count: usize, seed: u64) -> Vec<DisambGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n > 1 { (degree / (n - 1) as f64).min(1.0) } else { 0.0 };
    (0..count).map(|_| random_digraph(n, p, &mut rng)).collect()
}
