//! Pipeline-level properties: graph construction against a brute-force pair
//! scan, order independence, and the popularity baseline as a special case.

use std::collections::HashMap;

use centilink_core::candidates::{popularity_scores, top_x};
use centilink_core::dict::{EntityLinkIndex, MentionEntityDict};
use centilink_core::linker::link_corpus;
use centilink_core::synth::{synthetic_world, SyntheticWorld};
use centilink_core::{Document, DisambGraph, Linker, LinkerConfig, Method};
use proptest::prelude::*;

fn world(seed: u64) -> SyntheticWorld {
    synthetic_world(40, seed)
}

fn chosen(linker: &Linker<'_>, doc: &Document) -> Vec<Option<String>> {
    linker.link_document(doc).into_iter().map(|d| d.chosen).collect()
}

#[test]
fn graph_edges_match_pair_scan() {
    let w = world(1);
    let linker = Linker::new(&w.mentions, &w.links, LinkerConfig::default()).unwrap();
    let mut tsv = Vec::new();
    w.links.write_tsv(&mut tsv).unwrap();
    let scanned: std::collections::HashSet<(String, String)> = String::from_utf8(tsv)
        .unwrap()
        .lines()
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[0].to_owned(), f[1].to_owned())
        })
        .collect();

    for doc in &w.dataset.documents {
        let cands = linker.candidates(doc);
        let g = DisambGraph::build(&cands, &w.links);
        let nodes: Vec<(usize, &str)> = cands
            .iter()
            .enumerate()
            .flat_map(|(m, cs)| cs.iter().map(move |c| (m, c.entity.as_str())))
            .collect();
        assert_eq!(g.node_count(), nodes.len());
        let mut expected = Vec::new();
        for (u, a) in nodes.iter().enumerate() {
            for (v, b) in nodes.iter().enumerate() {
                if a.0 != b.0 && scanned.contains(&(a.1.to_owned(), b.1.to_owned())) {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), expected, "doc {}", doc.id);

        let n = nodes.len();
        let intra: usize = cands.iter().map(|c| c.len() * c.len().saturating_sub(1)).sum();
        assert!(g.edge_count() <= n * n.saturating_sub(1) - intra);
    }
}

#[test]
fn edgeless_graphs_reduce_to_popularity() {
    let w = world(2);
    let empty = EntityLinkIndex::default();
    let popular = Linker::new(&w.mentions, &empty, LinkerConfig::with_method(Method::Popularity)).unwrap();
    for method in Method::ALL {
        let linker = Linker::new(&w.mentions, &empty, LinkerConfig::with_method(method)).unwrap();
        for doc in &w.dataset.documents {
            assert_eq!(chosen(&linker, doc), chosen(&popular, doc), "{method} on {}", doc.id);
        }
    }
}

#[test]
fn top1_pipeline_is_the_popularity_baseline() {
    let w = world(3);
    let popular = Linker::new(&w.mentions, &w.links, LinkerConfig::with_method(Method::Popularity)).unwrap();
    for method in Method::ALL {
        let cfg = LinkerConfig { top_x: 1, ..LinkerConfig::with_method(method) };
        let linker = Linker::new(&w.mentions, &w.links, cfg).unwrap();
        for doc in &w.dataset.documents {
            assert_eq!(chosen(&linker, doc), chosen(&popular, doc));
        }
    }
}

#[test]
fn chosen_entity_is_a_retained_candidate() {
    let w = world(4);
    for method in Method::ALL {
        for x in [1, 2, 3, 5] {
            let cfg = LinkerConfig { top_x: x, ..LinkerConfig::with_method(method) };
            let linker = Linker::new(&w.mentions, &w.links, cfg).unwrap();
            for doc in &w.dataset.documents {
                let cands = linker.candidates(doc);
                for d in linker.link_document(doc) {
                    match d.chosen {
                        Some(e) => assert!(cands[d.mention].iter().any(|c| c.entity == e)),
                        None => assert!(cands[d.mention].is_empty()),
                    }
                }
            }
        }
    }
}

#[test]
fn corpus_results_ignore_batch_order_and_workers() {
    let w = world(5);
    let linker = Linker::new(&w.mentions, &w.links, LinkerConfig::default()).unwrap();
    let docs = &w.dataset.documents;
    let forward = link_corpus(&linker, docs, 1).unwrap();

    let mut reversed: Vec<Document> = docs.clone();
    reversed.reverse();
    let backward = link_corpus(&linker, &reversed, 4).unwrap();
    let by_id: HashMap<_, _> = backward.iter().map(|d| (d.id.clone(), d)).collect();
    for d in &forward {
        assert_eq!(&d.decisions, &by_id[&d.id].decisions);
    }

    // batch == concatenation of single-document runs
    for (doc, batch) in docs.iter().zip(&forward) {
        assert_eq!(linker.link_document(doc), batch.decisions);
    }
    let twice = link_corpus(&linker, &[docs[0].clone(), docs[0].clone()], 2).unwrap();
    assert_eq!(twice[0].decisions, twice[1].decisions);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mention_order_does_not_change_decisions(
        seed in 0u64..1000,
        shuffle_seed in any::<u64>(),
    ) {
        let w = synthetic_world(6, seed);
        for method in Method::ALL {
            let linker = Linker::new(&w.mentions, &w.links, LinkerConfig::with_method(method)).unwrap();
            for doc in &w.dataset.documents {
                let n = doc.mentions.len();
                let mut order: Vec<usize> = (0..n).collect();
                // deterministic Fisher–Yates from the proptest seed
                let mut s = shuffle_seed | 1;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    order.swap(i, (s >> 33) as usize % (i + 1));
                }
                let permuted = Document {
                    id: doc.id.clone(),
                    mentions: order.iter().map(|&i| doc.mentions[i].clone()).collect(),
                };
                let a = chosen(&linker, doc);
                let b = chosen(&linker, &permuted);
                for (new_pos, &old_pos) in order.iter().enumerate() {
                    prop_assert_eq!(&a[old_pos], &b[new_pos], "{} doc {}", method, &doc.id);
                }
            }
        }
    }

    #[test]
    fn popularity_is_a_distribution_and_scale_invariant(
        counts in proptest::collection::vec(1u64..10_000, 1..12),
        k in 1u64..50,
    ) {
        let tsv = |scale: u64| -> MentionEntityDict {
            let text: String = counts
                .iter()
                .enumerate()
                .map(|(i, c)| format!("m\tE{i}\t{}\n", c * scale))
                .collect();
            MentionEntityDict::read_tsv(text.as_bytes()).unwrap().0
        };
        let base = popularity_scores(&tsv(1), "m");
        let scaled = popularity_scores(&tsv(k), "m");
        let sum: f64 = base.iter().map(|c| c.popularity).sum();
        prop_assert!((sum - 1.0).abs() <= 1e-12);
        let names = |v: &[centilink_core::Candidate]| v.iter().map(|c| c.entity.clone()).collect::<Vec<_>>();
        prop_assert_eq!(names(&base), names(&scaled));

        let best = counts
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| format!("E{}", b.0).cmp(&format!("E{}", a.0))))
            .unwrap();
        let top = top_x(base, 1).unwrap();
        prop_assert_eq!(&top[0].entity, &format!("E{}", best.0));
    }
}
