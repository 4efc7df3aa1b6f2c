use std::cmp::Reverse;
use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::normalize_mention;

use super::{split_record, LoadNotes};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntityCount {
    pub entity: String,
    pub count: u64,
}

/// Normalized mention surface → entities ordered by `(-count, entity)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MentionEntityDict {
    entries: HashMap<String, Vec<EntityCount>>,
}

fn sort_entities(list: &mut [EntityCount]) {
    list.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.entity.cmp(&b.entity)));
}

impl MentionEntityDict {
    /// Builds from already-normalized mentions. Zero counts are dropped.
    pub fn from_counts(counts: HashMap<String, HashMap<String, u64>>) -> Self {
        let entries = counts
            .into_iter()
            .filter_map(|(mention, entities)| {
                let mut list: Vec<EntityCount> = entities
                    .into_iter()
                    .filter(|&(_, c)| c > 0)
                    .map(|(entity, count)| EntityCount { entity, count })
                    .collect();
                if list.is_empty() {
                    return None;
                }
                sort_entities(&mut list);
                Some((mention, list))
            })
            .collect();
        MentionEntityDict { entries }
    }

    /// Candidates of a surface string in popularity order; empty if unseen.
    pub fn lookup(&self, surface: &str) -> &[EntityCount] {
        self.get_normalized(&normalize_mention(surface))
    }

    pub fn get_normalized(&self, mention: &str) -> &[EntityCount] {
        self.entries.get(mention).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of distinct mentions.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of (mention, entity) entries.
    pub fn pair_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    /// Sum of all pair counts.
    pub fn total_count(&self) -> u64 {
        self.entries.values().flatten().map(|e| e.count).sum()
    }

    /// Mentions in byte order with their entity lists.
    pub fn iter_sorted(&self) -> Vec<(&str, &[EntityCount])> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|(m, l)| (m.as_str(), l.as_slice()))
            .collect();
        out.sort_unstable_by(|a, b| a.0.cmp(b.0));
        out
    }

    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for (mention, list) in self.iter_sorted() {
            for e in list {
                writeln!(w, "{mention}\t{}\t{}", e.entity, e.count)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Parses the TSV format. Non-canonical input (unsorted lines, duplicate
    /// pairs, un-normalized mentions) is accepted and repaired; the returned
    /// notes say what was fixed.
    pub fn read_tsv<R: BufRead>(reader: R) -> Result<(Self, LoadNotes)> {
        let mut notes = LoadNotes::default();
        let mut counts: HashMap<String, HashMap<String, u64>> = HashMap::new();
        let mut prev: Option<(String, Reverse<u64>, String)> = None;

        for (i, line) in reader.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::malformed(lineno, e.to_string()))?;
            let (raw_mention, entity, count) = split_record(&line, lineno)?;
            let mention = normalize_mention(raw_mention);
            if mention.is_empty() {
                return Err(Error::malformed(lineno, "empty mention"));
            }
            if mention != raw_mention {
                notes.unsorted = true;
            }
            let key = (mention, Reverse(count), entity.to_owned());
            if let Some(p) = &prev {
                if *p >= key {
                    notes.unsorted = true;
                }
            }
            let slot = counts
                .entry(key.0.clone())
                .or_default()
                .entry(key.2.clone())
                .or_insert(0);
            if *slot > 0 {
                notes.duplicates += 1;
            }
            *slot += count;
            prev = Some(key);
            notes.lines = lineno;
        }
        Ok((Self::from_counts(counts), notes))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let (dict, notes) = Self::read_tsv(BufReader::new(File::open(path)?))?;
        notes.warn(&path.display().to_string());
        Ok(dict)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_tsv(BufWriter::new(File::create(path)?))
    }
}
