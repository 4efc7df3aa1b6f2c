//! Read-only mention→entity and entity→entity dictionaries, their TSV
//! persistence and a binary load cache.
//!
//! File formats (UTF-8, one record per line, `\n` terminated):
//!
//! * mention dictionary: `mention<TAB>entity<TAB>count`, sorted by
//!   `(mention, -count, entity)`;
//! * entity link index: `source<TAB>target<TAB>count`, sorted by
//!   `(source, target)`.

mod cache;
mod links;
mod mention;

pub use cache::{cache_path, load_entity_index_cached, load_mention_dict_cached, CACHE_MAGIC};
pub use links::EntityLinkIndex;
pub use mention::{EntityCount, MentionEntityDict};

/// Version of the on-disk dictionary formats (TSV layout and binary cache).
pub const DICT_FORMAT_VERSION: u8 = 1;

/// File names used inside a dictionary directory.
pub const MENTIONS_FILE: &str = "mentions.tsv";
pub const LINKS_FILE: &str = "links.tsv";

/// What a loader had to repair while reading a non-canonical file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadNotes {
    pub lines: usize,
    /// Input was not in canonical order and has been re-sorted.
    pub unsorted: bool,
    /// Repeated keys whose counts were summed.
    pub duplicates: usize,
    /// Self-loop edges dropped (entity index only).
    pub self_loops: usize,
}

impl LoadNotes {
    pub(crate) fn warn(&self, what: &str) {
        if self.unsorted {
            log::warn!("{what}: input not in canonical order, re-sorted");
        }
        if self.duplicates > 0 {
            log::warn!("{what}: {} duplicate keys merged", self.duplicates);
        }
        if self.self_loops > 0 {
            log::warn!("{what}: {} self-loop edges dropped", self.self_loops);
        }
    }
}

pub(crate) fn split_record(line: &str, lineno: usize) -> crate::Result<(&str, &str, u64)> {
    let mut fields = line.split('\t');
    let (Some(a), Some(b), Some(c), None) = (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        return Err(crate::Error::malformed(lineno, "expected 3 tab-separated fields"));
    };
    if a.is_empty() || b.is_empty() {
        return Err(crate::Error::malformed(lineno, "empty key field"));
    }
    let count: u64 = c
        .parse()
        .map_err(|_| crate::Error::malformed(lineno, format!("invalid count {c:?}")))?;
    if count == 0 {
        return Err(crate::Error::malformed(lineno, "count must be at least 1"));
    }
    Ok((a, b, count))
}
