use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linker::{Document, Mention};

/// A named set of documents whose mentions all carry a gold entity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldDataset {
    pub name: String,
    pub documents: Vec<Document>,
}

impl GoldDataset {
    pub fn mention_count(&self) -> usize {
        self.documents.iter().map(|d| d.mentions.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetLoad {
    pub dataset: GoldDataset,
    /// Mentions dropped for lacking a gold entity or a surface.
    pub rejected: usize,
}

#[derive(Deserialize)]
struct RawDocument {
    id: String,
    #[serde(default)]
    mentions: Vec<RawMention>,
}

#[derive(Deserialize)]
struct RawMention {
    surface: String,
    #[serde(default)]
    gold: Option<String>,
    #[serde(default)]
    start: Option<usize>,
    #[serde(default)]
    end: Option<usize>,
}

impl RawMention {
    fn into_mention(self) -> Mention {
        Mention {
            surface: self.surface,
            span: self.start.zip(self.end),
            gold: self.gold.filter(|g| !g.trim().is_empty()),
        }
    }
}

fn read_raw<R: BufRead>(reader: R) -> impl Iterator<Item = Result<RawDocument>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let lineno = i + 1;
            match line {
                Err(e) => Some(Err(Error::malformed(lineno, e.to_string()))),
                Ok(l) if l.trim().is_empty() => None,
                Ok(l) => Some(
                    serde_json::from_str::<RawDocument>(&l)
                        .map_err(|e| Error::malformed(lineno, e.to_string())),
                ),
            }
        })
}

/// Reads documents for linking; gold entities are optional.
pub fn read_documents<R: BufRead>(reader: R) -> Result<Vec<Document>> {
    read_raw(reader)
        .map(|raw| {
            let raw = raw?;
            Ok(Document {
                id: raw.id,
                mentions: raw.mentions.into_iter().map(RawMention::into_mention).collect(),
            })
        })
        .collect()
}

/// Reads a gold dataset. Mentions without a gold entity (or with an empty
/// surface) are rejected and counted, not treated as errors.
pub fn read_dataset<R: BufRead>(name: &str, reader: R) -> Result<DatasetLoad> {
    let mut rejected = 0;
    let mut documents = Vec::new();
    for raw in read_raw(reader) {
        let raw = raw?;
        let mentions = raw
            .mentions
            .into_iter()
            .map(RawMention::into_mention)
            .filter(|m| {
                let keep = m.gold.is_some() && !m.surface.trim().is_empty();
                rejected += usize::from(!keep);
                keep
            })
            .collect();
        documents.push(Document {
            id: raw.id,
            mentions,
        });
    }
    Ok(DatasetLoad {
        dataset: GoldDataset {
            name: name.to_owned(),
            documents,
        },
        rejected,
    })
}

/// Loads a dataset JSONL file, named after the file stem.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<DatasetLoad> {
    let path = path.as_ref();
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let load = read_dataset(&name, BufReader::new(File::open(path)?))?;
    if load.rejected > 0 {
        log::warn!(
            "{}: rejected {} mentions without a gold entity",
            path.display(),
            load.rejected
        );
    }
    log::info!(
        "{}: {} documents, {} mentions",
        name,
        load.dataset.documents.len(),
        load.dataset.mention_count()
    );
    Ok(load)
}
