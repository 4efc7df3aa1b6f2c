//! Knowledge-base link corpus ingestion.
//!
//! The corpus is a UTF-8, line-oriented sequence of page records:
//!
//! ```text
//! #PAGE<TAB>Sun_Microsystems
//! Oracle<TAB>Oracle_Corporation
//! Java<TAB>Java_(programming_language)
//!
//! #PAGE<TAB>Java_(programming_language)
//! ...
//! ```
//!
//! Every page title contributes a `(title, title)` mention pair and every
//! outlink an `(anchor, target)` pair; outlinks also become directed
//! `title → target` edges of the entity link index.

mod build;
mod corpus;

pub use build::{
    build_entity_index, build_mention_dict, compute_stats, retain_known_targets, CorpusStats,
    DictionaryBuilder, Dictionaries, EntityIndexBuilder, MentionDictBuilder,
};
pub use corpus::{collect_titles, parse_corpus, CorpusReader, Outlink, RawPage, PAGE_MARKER};
