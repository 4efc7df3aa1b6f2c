//! Ingestion and dictionary invariants on the bundled fixture corpus and on
//! generated corpora.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;

use centilink_core::dict::{EntityLinkIndex, MentionEntityDict};
use centilink_core::ingest::{
    build_entity_index, build_mention_dict, compute_stats, parse_corpus, DictionaryBuilder, RawPage,
};
use centilink_core::synth::write_corpus;
use centilink_core::{normalize_mention, Result};
use proptest::prelude::*;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn three_pages() -> Vec<RawPage> {
    let bytes = fs::read(fixture("three_pages.corpus")).unwrap();
    parse_corpus(&bytes[..]).collect::<Result<_>>().unwrap()
}

#[test]
fn fixture_corpus_parses_to_three_pages() {
    let pages = three_pages();
    let titles: Vec<&str> = pages.iter().map(|p| p.title.as_str()).collect();
    assert_eq!(titles, ["Sun_Microsystems", "Java_(programming_language)", "Indonesia"]);
    let mut links: Vec<(&str, &str, &str)> = pages
        .iter()
        .flat_map(|p| p.outlinks.iter().map(move |l| (p.title.as_str(), l.anchor.as_str(), l.target.as_str())))
        .collect();
    links.sort();
    assert_eq!(
        links,
        [
            ("Indonesia", "Java", "Java_(island)"),
            ("Indonesia", "java", "Java_(programming_language)"),
            ("Java_(programming_language)", "Oracle", "Oracle_Corporation"),
            ("Java_(programming_language)", "Sun", "Sun_Microsystems"),
            ("Sun_Microsystems", "Java", "Java_(programming_language)"),
            ("Sun_Microsystems", "Oracle", "Oracle_Corporation"),
            ("Sun_Microsystems", "StarOffice", "StarOffice"),
        ]
    );
}

#[test]
fn fixture_java_counts() {
    let dict = build_mention_dict(three_pages().into_iter().map(Ok)).unwrap();
    let java: Vec<_> = dict.lookup("java").iter().map(|e| (e.entity.as_str(), e.count)).collect();
    assert_eq!(java, [("Java_(programming_language)", 2), ("Java_(island)", 1)]);
    assert_eq!(dict.lookup("Oracle")[0].count, 2);
}

#[test]
fn fixture_mutual_links_and_stats() {
    let index = build_entity_index(three_pages().into_iter().map(Ok)).unwrap();
    assert!(index.has_edge("Sun_Microsystems", "Java_(programming_language)"));
    assert!(index.has_edge("Java_(programming_language)", "Sun_Microsystems"));
    assert_eq!(index.edge_total(), 7);

    let stats = compute_stats(three_pages().into_iter().map(Ok)).unwrap();
    assert_eq!(stats.pages, 3);
    assert_eq!(stats.pages_with_links, 3);
    assert_eq!(stats.mention_pairs, 10);
    // sun_microsystems, java_(programming_language), indonesia, oracle, staroffice, java, sun
    assert_eq!(stats.distinct_mentions, 7);
}

fn pages() -> impl Strategy<Value = Vec<RawPage>> {
    let name = prop::sample::select(vec!["A", "B", "C", "D", "E_(x)", "F"]);
    let anchor = prop::sample::select(vec!["a", "A", "b  c", "B C", "d", "e"]);
    proptest::collection::vec(
        (name.clone(), proptest::collection::vec((anchor, name), 0..6)),
        0..30,
    )
    .prop_map(|raw| {
        raw.into_iter()
            .map(|(t, links)| {
                links
                    .into_iter()
                    .fold(RawPage::new(t), |p, (a, tgt)| p.with_link(a, tgt))
            })
            .collect()
    })
}

fn serialize(d: &MentionEntityDict, i: &EntityLinkIndex) -> (Vec<u8>, Vec<u8>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    d.write_tsv(&mut a).unwrap();
    i.write_tsv(&mut b).unwrap();
    (a, b)
}

proptest! {
    #[test]
    fn count_conservation(pages in pages()) {
        let dict = build_mention_dict(pages.iter().cloned().map(Ok)).unwrap();
        let outlinks: usize = pages.iter().map(|p| p.outlinks.len()).sum();
        prop_assert_eq!(dict.total_count(), (pages.len() + outlinks) as u64);
    }

    #[test]
    fn edge_set_is_distinct_title_target_pairs(pages in pages()) {
        let index = build_entity_index(pages.iter().cloned().map(Ok)).unwrap();
        let mut expected: BTreeMap<(String, String), u64> = BTreeMap::new();
        for p in &pages {
            for l in &p.outlinks {
                if l.target != p.title {
                    *expected.entry((p.title.clone(), l.target.clone())).or_default() += 1;
                }
            }
        }
        let got: BTreeMap<(String, String), u64> = index
            .edges()
            .map(|(s, t, c)| ((s.to_owned(), t.to_owned()), c))
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn has_edge_agrees_with_tsv_scan(pages in pages()) {
        let index = build_entity_index(pages.iter().cloned().map(Ok)).unwrap();
        let mut tsv = Vec::new();
        index.write_tsv(&mut tsv).unwrap();
        let text = String::from_utf8(tsv).unwrap();
        let names = ["A", "B", "C", "D", "E_(x)", "F", "Nope"];
        for s in names {
            for t in names {
                let scanned = text.lines().any(|l| {
                    let f: Vec<&str> = l.split('\t').collect();
                    f[0] == s && f[1] == t
                });
                prop_assert_eq!(index.has_edge(s, t), scanned);
            }
        }
    }

    #[test]
    fn lookup_order_is_total_and_normalization_invariant(pages in pages()) {
        let dict = build_mention_dict(pages.iter().cloned().map(Ok)).unwrap();
        for (mention, list) in dict.iter_sorted() {
            for w in list.windows(2) {
                prop_assert!((std::cmp::Reverse(w[0].count), &w[0].entity) < (std::cmp::Reverse(w[1].count), &w[1].entity));
            }
            prop_assert_eq!(dict.lookup(&mention.to_uppercase()), list);
            prop_assert_eq!(normalize_mention(mention), mention);
        }
    }

    #[test]
    fn save_load_save_is_identity(pages in pages()) {
        let mut b = DictionaryBuilder::new();
        b.extend(pages.iter().cloned().map(Ok)).unwrap();
        let d = b.finish();
        let (m1, l1) = serialize(&d.mentions, &d.links);
        let (m, notes) = MentionEntityDict::read_tsv(&m1[..]).unwrap();
        prop_assert!(!notes.unsorted);
        let (l, _) = EntityLinkIndex::read_tsv(&l1[..]).unwrap();
        let (m2, l2) = serialize(&m, &l);
        prop_assert_eq!(m1, m2);
        prop_assert_eq!(l1, l2);
    }

    #[test]
    fn shard_merge_order_does_not_matter(pages in pages(), split in 0usize..30) {
        let split = split.min(pages.len());
        let build = |ps: &[RawPage]| {
            let mut b = DictionaryBuilder::new();
            b.extend(ps.iter().cloned().map(Ok)).unwrap();
            b
        };
        let mut ab = build(&pages[..split]);
        ab.merge(build(&pages[split..]));
        let mut ba = build(&pages[split..]);
        ba.merge(build(&pages[..split]));
        let (ab, ba) = (ab.finish(), ba.finish());
        prop_assert_eq!(serialize(&ab.mentions, &ab.links), serialize(&ba.mentions, &ba.links));
        prop_assert_eq!(ab.stats, ba.stats);
    }
}

#[test]
fn ingesting_twice_is_byte_identical() {
    let mut corpus = Vec::new();
    write_corpus(&mut corpus, 500, 11).unwrap();
    let run = || {
        let mut b = DictionaryBuilder::new();
        b.extend(parse_corpus(&corpus[..])).unwrap();
        let d = b.finish();
        serialize(&d.mentions, &d.links)
    };
    assert_eq!(run(), run());
}

#[test]
fn generated_corpus_distinct_mentions_match_brute_force() {
    let mut corpus = Vec::new();
    write_corpus(&mut corpus, 300, 5).unwrap();
    let pages: Vec<RawPage> = parse_corpus(&corpus[..]).collect::<Result<_>>().unwrap();
    let stats = compute_stats(pages.iter().cloned().map(Ok)).unwrap();
    let surfaces: BTreeSet<String> = pages
        .iter()
        .flat_map(|p| std::iter::once(&p.title).chain(p.outlinks.iter().map(|l| &l.anchor)))
        .map(|s| normalize_mention(s))
        .collect();
    assert_eq!(stats.distinct_mentions, surfaces.len() as u64);
    assert!(stats.pages_with_links <= stats.pages);
    assert!(stats.distinct_mentions <= stats.mention_pairs);
}
