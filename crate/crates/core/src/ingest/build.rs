use std::collections::{HashMap, HashSet};

use crate::dict::{EntityLinkIndex, MentionEntityDict};
use crate::error::Result;
use crate::text::normalize_mention;

use super::corpus::RawPage;

/// Corpus-level counts.
///
/// `mention_pairs` counts every (mention, entity) occurrence, one per title
/// plus one per outlink; `distinct_mentions` counts normalized surfaces.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub pages: u64,
    pub pages_with_links: u64,
    pub mention_pairs: u64,
    pub distinct_mentions: u64,
}

/// Accumulates (mention, entity) pair counts. Merging is commutative, so
/// shards of a corpus may be counted independently and combined in any order.
#[derive(Debug, Default, Clone)]
pub struct MentionDictBuilder {
    counts: HashMap<String, HashMap<String, u64>>,
}

impl MentionDictBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` occurrences of `(normalize(surface), entity)`.
    pub fn add(&mut self, surface: &str, entity: &str, count: u64) {
        let mention = normalize_mention(surface);
        if mention.is_empty() || count == 0 {
            return;
        }
        *self
            .counts
            .entry(mention)
            .or_default()
            .entry(entity.to_owned())
            .or_insert(0) += count;
    }

    pub fn add_page(&mut self, page: &RawPage) {
        self.add(&page.title, &page.title, 1);
        for link in &page.outlinks {
            self.add(&link.anchor, &link.target, 1);
        }
    }

    pub fn merge(&mut self, other: MentionDictBuilder) {
        for (mention, entities) in other.counts {
            let slot = self.counts.entry(mention).or_default();
            for (entity, count) in entities {
                *slot.entry(entity).or_insert(0) += count;
            }
        }
    }

    pub fn finish(self) -> MentionEntityDict {
        MentionEntityDict::from_counts(self.counts)
    }
}

/// Accumulates directed `title → target` edges with occurrence counts.
#[derive(Debug, Default, Clone)]
pub struct EntityIndexBuilder {
    adjacency: HashMap<String, HashMap<String, u64>>,
}

impl EntityIndexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_edge(&mut self, source: &str, target: &str, count: u64) {
        let targets = self.adjacency.entry(source.to_owned()).or_default();
        if source != target && count > 0 {
            *targets.entry(target.to_owned()).or_insert(0) += count;
        }
    }

    pub fn add_page(&mut self, page: &RawPage) {
        let targets = self.adjacency.entry(page.title.clone()).or_default();
        for link in &page.outlinks {
            if link.target != page.title {
                *targets.entry(link.target.clone()).or_insert(0) += 1;
            }
        }
    }

    pub fn merge(&mut self, other: EntityIndexBuilder) {
        for (source, targets) in other.adjacency {
            let slot = self.adjacency.entry(source).or_default();
            for (target, count) in targets {
                *slot.entry(target).or_insert(0) += count;
            }
        }
    }

    pub fn finish(self) -> EntityLinkIndex {
        EntityLinkIndex::from_adjacency(self.adjacency)
    }
}

#[derive(Debug, Default, Clone)]
struct StatsAccumulator {
    stats: CorpusStats,
    surfaces: HashSet<String>,
}

impl StatsAccumulator {
    fn add_page(&mut self, page: &RawPage) {
        self.stats.pages += 1;
        if !page.outlinks.is_empty() {
            self.stats.pages_with_links += 1;
        }
        self.stats.mention_pairs += 1 + page.outlinks.len() as u64;
        self.surfaces.insert(normalize_mention(&page.title));
        for link in &page.outlinks {
            self.surfaces.insert(normalize_mention(&link.anchor));
        }
    }

    fn merge(&mut self, other: StatsAccumulator) {
        self.stats.pages += other.stats.pages;
        self.stats.pages_with_links += other.stats.pages_with_links;
        self.stats.mention_pairs += other.stats.mention_pairs;
        self.surfaces.extend(other.surfaces);
    }

    fn finish(self) -> CorpusStats {
        CorpusStats {
            distinct_mentions: self.surfaces.len() as u64,
            ..self.stats
        }
    }
}

/// Output of a full ingestion pass.
#[derive(Debug, Clone)]
pub struct Dictionaries {
    pub mentions: MentionEntityDict,
    pub links: EntityLinkIndex,
    pub stats: CorpusStats,
}

/// Builds both dictionaries and the corpus statistics in one pass.
#[derive(Debug, Default, Clone)]
pub struct DictionaryBuilder {
    mentions: MentionDictBuilder,
    links: EntityIndexBuilder,
    stats: StatsAccumulator,
}

impl DictionaryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_page(&mut self, page: &RawPage) {
        self.mentions.add_page(page);
        self.links.add_page(page);
        self.stats.add_page(page);
    }

    /// Consumes a page stream, stopping at the first parse error.
    pub fn extend<I>(&mut self, pages: I) -> Result<()>
    where
        I: IntoIterator<Item = Result<RawPage>>,
    {
        for page in pages {
            self.add_page(&page?);
        }
        Ok(())
    }

    pub fn merge(&mut self, other: DictionaryBuilder) {
        self.mentions.merge(other.mentions);
        self.links.merge(other.links);
        self.stats.merge(other.stats);
    }

    pub fn finish(self) -> Dictionaries {
        Dictionaries {
            mentions: self.mentions.finish(),
            links: self.links.finish(),
            stats: self.stats.finish(),
        }
    }
}

/// Drops outlinks whose target is not a known page title.
pub fn retain_known_targets(page: &mut RawPage, titles: &HashSet<String>) {
    page.outlinks.retain(|l| titles.contains(&l.target));
}

pub fn build_mention_dict<I>(pages: I) -> Result<MentionEntityDict>
where
    I: IntoIterator<Item = Result<RawPage>>,
{
    let mut builder = MentionDictBuilder::new();
    for page in pages {
        builder.add_page(&page?);
    }
    Ok(builder.finish())
}

pub fn build_entity_index<I>(pages: I) -> Result<EntityLinkIndex>
where
    I: IntoIterator<Item = Result<RawPage>>,
{
    let mut builder = EntityIndexBuilder::new();
    for page in pages {
        builder.add_page(&page?);
    }
    Ok(builder.finish())
}

pub fn compute_stats<I>(pages: I) -> Result<CorpusStats>
where
    I: IntoIterator<Item = Result<RawPage>>,
{
    let mut acc = StatsAccumulator::default();
    for page in pages {
        acc.add_page(&page?);
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_corpus;

    fn ok(pages: Vec<RawPage>) -> impl Iterator<Item = Result<RawPage>> {
        pages.into_iter().map(Ok)
    }

    #[test]
    fn title_is_its_own_mention() {
        let dict = build_mention_dict(ok(vec![RawPage::new("Paris")])).unwrap();
        let got: Vec<_> = dict
            .lookup("paris")
            .iter()
            .map(|e| (e.entity.as_str(), e.count))
            .collect();
        assert_eq!(got, vec![("Paris", 1)]);
    }

    #[test]
    fn sun_counts_order_by_popularity() {
        let mut b = MentionDictBuilder::new();
        b.add("sun", "Sun_Microsystems", 230);
        b.add("Sun", "Planet_in_astrology", 59);
        b.add("SUN", "The_sun_(United_kingdom)", 4692);
        let dict = b.finish();
        let got: Vec<_> = dict.lookup("sun").iter().map(|e| e.entity.as_str()).collect();
        assert_eq!(
            got,
            ["The_sun_(United_kingdom)", "Sun_Microsystems", "Planet_in_astrology"]
        );
    }

    #[test]
    fn table3_out_neighbors() {
        let page = RawPage::new("Sun_Microsystems")
            .with_link("Oracle", "Oracle_Corporation")
            .with_link("StarOffice", "StarOffice")
            .with_link("Java", "Java_(programming_language)");
        let index = build_entity_index(ok(vec![page])).unwrap();
        let mut out: Vec<_> = index
            .out_neighbors("Sun_Microsystems")
            .map(|(t, _)| t)
            .collect();
        out.sort();
        assert_eq!(
            out,
            ["Java_(programming_language)", "Oracle_Corporation", "StarOffice"]
        );
    }

    #[test]
    fn page_without_links_is_present() {
        let index = build_entity_index(ok(vec![RawPage::new("Lonely")])).unwrap();
        assert!(index.contains_entity("Lonely"));
        assert_eq!(index.out_neighbors("Lonely").count(), 0);
    }

    #[test]
    fn stats_on_two_pages() {
        let pages = vec![
            RawPage::new("A")
                .with_link("alpha", "B")
                .with_link("Alpha", "C")
                .with_link("beta", "B"),
            RawPage::new("B"),
        ];
        let stats = compute_stats(ok(pages)).unwrap();
        // surfaces: "a", "b", "alpha", "beta"
        assert_eq!(
            stats,
            CorpusStats {
                pages: 2,
                pages_with_links: 1,
                mention_pairs: 5,
                distinct_mentions: 4,
            }
        );
        assert_eq!(compute_stats(ok(vec![])).unwrap(), CorpusStats::default());
    }

    #[test]
    fn shard_merge_matches_single_pass() {
        let src = "#PAGE\tA\nx\tB\ny\tC\n\n#PAGE\tB\nx\tA\n\n#PAGE\tC\nx\tB\nz\tA\n";
        let all: Vec<RawPage> = parse_corpus(src.as_bytes()).collect::<Result<_>>().unwrap();

        let mut whole = DictionaryBuilder::new();
        whole.extend(all.iter().cloned().map(Ok)).unwrap();
        let whole = whole.finish();

        let mut left = DictionaryBuilder::new();
        let mut right = DictionaryBuilder::new();
        left.extend(all[2..].iter().cloned().map(Ok)).unwrap();
        right.extend(all[..2].iter().cloned().map(Ok)).unwrap();
        left.merge(right);
        let merged = left.finish();

        assert_eq!(whole.mentions, merged.mentions);
        assert_eq!(whole.links, merged.links);
        assert_eq!(whole.stats, merged.stats);
    }

    #[test]
    fn parse_errors_propagate() {
        let res = build_mention_dict(parse_corpus("#PAGE\t\n".as_bytes()));
        assert!(res.is_err());
    }

    #[test]
    fn strict_targets_filter() {
        let titles: HashSet<String> = ["A", "B"].iter().map(|s| s.to_string()).collect();
        let mut page = RawPage::new("A").with_link("b", "B").with_link("red", "Missing");
        retain_known_targets(&mut page, &titles);
        assert_eq!(page.outlinks.len(), 1);
    }
}
