//! Seeded synthetic inputs for tests, scale checks and benchmarks.

use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dict::{EntityLinkIndex, MentionEntityDict};
use crate::eval::GoldDataset;
use crate::graph::DisambGraph;
use crate::ingest::{EntityIndexBuilder, MentionDictBuilder};
use crate::linker::{Document, Mention};

/// Erdős–Rényi digraph: each ordered pair `(u, v)`, `u ≠ v`, is an edge with
/// probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> DisambGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    DisambGraph::from_edges(n, edges)
}

/// Writes `pages` page records in corpus format. Page `i` is titled
/// `Page_i` and has up to 8 outlinks whose anchors come from a vocabulary of
/// about `pages / 2` surfaces, so anchors are shared and ambiguous.
pub fn write_corpus<W: Write>(mut w: W, pages: usize, seed: u64) -> io::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vocab = (pages / 2).max(1);
    for i in 0..pages {
        writeln!(w, "#PAGE\tPage_{i}")?;
        for _ in 0..rng.gen_range(0..=8) {
            let target = rng.gen_range(0..pages);
            let anchor = rng.gen_range(0..vocab);
            writeln!(w, "anchor {anchor}\tPage_{target}")?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// Dictionaries plus a gold dataset with topical structure: entities of one
/// topic link densely to each other, surfaces are shared across topics, and
/// each document draws its mentions from a single topic.
#[derive(Debug, Clone)]
pub struct SyntheticWorld {
    pub mentions: MentionEntityDict,
    pub links: EntityLinkIndex,
    pub dataset: GoldDataset,
}

pub fn synthetic_world(documents: usize, seed: u64) -> SyntheticWorld {
    const TOPICS: usize = 12;
    const PER_TOPIC: usize = 15;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let entity = |t: usize, k: usize| format!("T{t}_E{k}");
    let total = TOPICS * PER_TOPIC;
    let surfaces = total / 3;

    // every entity gets one surface; surfaces are shared by ~3 entities
    let mut surface_of = vec![0usize; total];
    let mut mentions = MentionDictBuilder::new();
    for t in 0..TOPICS {
        for k in 0..PER_TOPIC {
            let id = t * PER_TOPIC + k;
            let s = rng.gen_range(0..surfaces);
            surface_of[id] = s;
            let count = rng.gen_range(1..1000u64);
            mentions.add(&format!("word {s}"), &entity(t, k), count);
        }
    }

    let mut links = EntityIndexBuilder::new();
    for t in 0..TOPICS {
        for k in 0..PER_TOPIC {
            for t2 in 0..TOPICS {
                for k2 in 0..PER_TOPIC {
                    let p = if t == t2 { 0.3 } else { 0.01 };
                    if (t, k) != (t2, k2) && rng.gen_bool(p) {
                        links.add_edge(&entity(t, k), &entity(t2, k2), 1);
                    }
                }
            }
        }
    }

    let docs = (0..documents)
        .map(|d| {
            let t = rng.gen_range(0..TOPICS);
            let n = rng.gen_range(1..=10);
            let mut ks: Vec<usize> = (0..PER_TOPIC).collect();
            ks.shuffle(&mut rng);
            let mut ms: Vec<Mention> = ks[..n]
                .iter()
                .map(|&k| {
                    Mention::new(format!("Word {}", surface_of[t * PER_TOPIC + k]))
                        .with_gold(entity(t, k))
                })
                .collect();
            if rng.gen_bool(0.2) {
                ms.push(Mention::new(format!("unseen {d}")).with_gold(format!("Unknown_{d}")));
            }
            Document {
                id: format!("doc{d:04}"),
                mentions: ms,
            }
        })
        .collect();

    SyntheticWorld {
        mentions: mentions.finish(),
        links: links.finish(),
        dataset: GoldDataset {
            name: format!("synthetic-{seed}"),
            documents: docs,
        },
    }
}
