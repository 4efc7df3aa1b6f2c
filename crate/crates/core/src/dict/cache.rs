//! Binary load cache sitting next to a dictionary TSV.
//!
//! Layout (little endian): magic, format version byte, kind byte, the TSV's
//! length and modification time, then the payload. Any mismatch or decode
//! failure makes the cache invalid; the TSV is then re-read and the cache
//! rewritten. Failing to write the cache is not an error.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::UNIX_EPOCH;

use crate::error::Result;

use super::{EntityLinkIndex, MentionEntityDict, DICT_FORMAT_VERSION};

pub const CACHE_MAGIC: &[u8; 4] = b"CLDC";

const KIND_MENTIONS: u8 = 1;
const KIND_LINKS: u8 = 2;

/// `<tsv>.bin`
pub fn cache_path(tsv: &Path) -> PathBuf {
    let mut name = tsv.as_os_str().to_owned();
    name.push(".bin");
    PathBuf::from(name)
}

fn fingerprint(tsv: &Path) -> Result<(u64, u64)> {
    let meta = fs::metadata(tsv)?;
    let mtime = meta
        .modified()
        .ok()
        .and_then(|t| t.duration_since(UNIX_EPOCH).ok())
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    Ok((meta.len(), mtime))
}

struct Encoder(Vec<u8>);

impl Encoder {
    fn header(kind: u8, fp: (u64, u64)) -> Self {
        let mut e = Encoder(Vec::new());
        e.0.extend_from_slice(CACHE_MAGIC);
        e.0.push(DICT_FORMAT_VERSION);
        e.0.push(kind);
        e.u64(fp.0);
        e.u64(fp.1);
        e
    }

    fn u64(&mut self, v: u64) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }

    fn str(&mut self, s: &str) {
        self.u64(s.len() as u64);
        self.0.extend_from_slice(s.as_bytes());
    }
}

struct Decoder<'a>(&'a [u8]);

impl<'a> Decoder<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        if self.0.len() < n {
            return None;
        }
        let (head, rest) = self.0.split_at(n);
        self.0 = rest;
        Some(head)
    }

    fn u8(&mut self) -> Option<u8> {
        self.take(1).map(|b| b[0])
    }

    fn u64(&mut self) -> Option<u64> {
        self.take(8).map(|b| u64::from_le_bytes(b.try_into().unwrap()))
    }

    fn str(&mut self) -> Option<String> {
        let n = usize::try_from(self.u64()?).ok()?;
        let bytes = self.take(n)?;
        String::from_utf8(bytes.to_vec()).ok()
    }

    fn header(&mut self, kind: u8, fp: (u64, u64)) -> Option<()> {
        (self.take(4)? == CACHE_MAGIC
            && self.u8()? == DICT_FORMAT_VERSION
            && self.u8()? == kind
            && self.u64()? == fp.0
            && self.u64()? == fp.1)
            .then_some(())
    }
}

fn encode_mentions(dict: &MentionEntityDict, fp: (u64, u64)) -> Vec<u8> {
    let mut e = Encoder::header(KIND_MENTIONS, fp);
    let entries = dict.iter_sorted();
    e.u64(entries.len() as u64);
    for (mention, list) in entries {
        e.str(mention);
        e.u64(list.len() as u64);
        for ec in list {
            e.str(&ec.entity);
            e.u64(ec.count);
        }
    }
    e.0
}

fn decode_mentions(bytes: &[u8], fp: (u64, u64)) -> Option<MentionEntityDict> {
    let mut d = Decoder(bytes);
    d.header(KIND_MENTIONS, fp)?;
    let n = d.u64()?;
    let mut counts: HashMap<String, HashMap<String, u64>> = HashMap::new();
    for _ in 0..n {
        let mention = d.str()?;
        let k = d.u64()?;
        let slot = counts.entry(mention).or_default();
        for _ in 0..k {
            let entity = d.str()?;
            slot.insert(entity, d.u64()?);
        }
    }
    d.0.is_empty().then(|| MentionEntityDict::from_counts(counts))
}

fn encode_links(index: &EntityLinkIndex, fp: (u64, u64)) -> Vec<u8> {
    let mut e = Encoder::header(KIND_LINKS, fp);
    e.u64(index.edge_total() as u64);
    for (s, t, c) in index.edges() {
        e.str(s);
        e.str(t);
        e.u64(c);
    }
    e.0
}

fn decode_links(bytes: &[u8], fp: (u64, u64)) -> Option<EntityLinkIndex> {
    let mut d = Decoder(bytes);
    d.header(KIND_LINKS, fp)?;
    let n = d.u64()?;
    let mut adjacency: HashMap<String, HashMap<String, u64>> = HashMap::new();
    for _ in 0..n {
        let s = d.str()?;
        let t = d.str()?;
        adjacency.entry(s).or_default().insert(t, d.u64()?);
    }
    d.0.is_empty().then(|| EntityLinkIndex::from_adjacency(adjacency))
}

fn load_cached<T>(
    tsv: &Path,
    decode: impl Fn(&[u8], (u64, u64)) -> Option<T>,
    load: impl Fn(&Path) -> Result<T>,
    encode: impl Fn(&T, (u64, u64)) -> Vec<u8>,
) -> Result<T> {
    let fp = fingerprint(tsv)?;
    let cache = cache_path(tsv);
    if let Ok(bytes) = fs::read(&cache) {
        if let Some(value) = decode(&bytes, fp) {
            log::debug!("loaded {}", cache.display());
            return Ok(value);
        }
        log::debug!("stale or invalid cache {}, rebuilding", cache.display());
    }
    let value = load(tsv)?;
    if let Err(e) = fs::write(&cache, encode(&value, fp)) {
        log::debug!("could not write {}: {e}", cache.display());
    }
    Ok(value)
}

/// Loads a mention dictionary TSV through its binary cache.
pub fn load_mention_dict_cached(tsv: &Path) -> Result<MentionEntityDict> {
    load_cached(tsv, decode_mentions, |p| MentionEntityDict::load(p), encode_mentions)
}

/// Loads an entity link index TSV through its binary cache.
pub fn load_entity_index_cached(tsv: &Path) -> Result<EntityLinkIndex> {
    load_cached(tsv, decode_links, |p| EntityLinkIndex::load(p), encode_links)
}
