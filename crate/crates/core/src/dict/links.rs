use std::collections::{BTreeSet, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{split_record, LoadNotes};

/// Directed entity → entity links with occurrence counts.
///
/// Entities are interned in byte order of their identifiers, so two indexes
/// built from the same edges compare equal and serialize identically. Edge
/// membership is a hash lookup; only forward adjacency is stored. Self-loops
/// are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntityLinkIndex {
    ids: HashMap<String, u32>,
    names: Vec<String>,
    out: Vec<Vec<u32>>,
    edges: HashMap<(u32, u32), u64>,
}

impl EntityLinkIndex {
    /// Builds from `source → {target → count}`. Sources with no targets are
    /// kept as entities; self-loops and zero counts are dropped.
    pub fn from_adjacency(adjacency: HashMap<String, HashMap<String, u64>>) -> Self {
        let mut all: BTreeSet<&str> = BTreeSet::new();
        for (source, targets) in &adjacency {
            all.insert(source);
            all.extend(targets.keys().map(String::as_str));
        }
        let names: Vec<String> = all.into_iter().map(str::to_owned).collect();
        let ids: HashMap<String, u32> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();

        let mut out = vec![Vec::new(); names.len()];
        let mut edges = HashMap::new();
        for (source, targets) in &adjacency {
            let s = ids[source];
            for (target, &count) in targets {
                let t = ids[target];
                if s == t || count == 0 {
                    continue;
                }
                out[s as usize].push(t);
                edges.insert((s, t), count);
            }
        }
        for list in &mut out {
            list.sort_unstable();
        }
        EntityLinkIndex {
            ids,
            names,
            out,
            edges,
        }
    }

    fn id(&self, entity: &str) -> Option<u32> {
        self.ids.get(entity).copied()
    }

    /// True iff the directed edge `source → target` was ingested.
    pub fn has_edge(&self, source: &str, target: &str) -> bool {
        self.edge_count(source, target) > 0
    }

    /// Occurrence count of `source → target`, 0 when absent.
    pub fn edge_count(&self, source: &str, target: &str) -> u64 {
        match (self.id(source), self.id(target)) {
            (Some(s), Some(t)) => self.edges.get(&(s, t)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn contains_entity(&self, entity: &str) -> bool {
        self.ids.contains_key(entity)
    }

    /// Out-neighbors of `source` in byte order of their identifiers.
    pub fn out_neighbors<'a>(&'a self, source: &str) -> impl Iterator<Item = (&'a str, u64)> + 'a {
        let s = self.id(source);
        let list: &[u32] = match s {
            Some(s) => &self.out[s as usize],
            None => &[],
        };
        list.iter().map(move |&t| {
            let count = self.edges[&(s.unwrap(), t)];
            (self.names[t as usize].as_str(), count)
        })
    }

    /// Members of `subset` that link to `target`.
    pub fn in_neighbors_within<'s>(&self, target: &str, subset: &[&'s str]) -> Vec<&'s str> {
        subset
            .iter()
            .copied()
            .filter(|s| self.has_edge(s, target))
            .collect()
    }

    pub fn entity_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_total(&self) -> usize {
        self.edges.len()
    }

    /// All edges sorted by `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> + '_ {
        self.out.iter().enumerate().flat_map(move |(s, targets)| {
            targets.iter().map(move |&t| {
                (
                    self.names[s].as_str(),
                    self.names[t as usize].as_str(),
                    self.edges[&(s as u32, t)],
                )
            })
        })
    }

    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for (s, t, c) in self.edges() {
            writeln!(w, "{s}\t{t}\t{c}")?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R) -> Result<(Self, LoadNotes)> {
        let mut notes = LoadNotes::default();
        let mut adjacency: HashMap<String, HashMap<String, u64>> = HashMap::new();
        let mut prev: Option<(String, String)> = None;

        for (i, line) in reader.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::malformed(lineno, e.to_string()))?;
            let (source, target, count) = split_record(&line, lineno)?;
            notes.lines = lineno;
            if source == target {
                notes.self_loops += 1;
                continue;
            }
            if let Some((ps, pt)) = &prev {
                if (ps.as_str(), pt.as_str()) >= (source, target) {
                    notes.unsorted = true;
                }
            }
            let slot = adjacency
                .entry(source.to_owned())
                .or_default()
                .entry(target.to_owned())
                .or_insert(0);
            if *slot > 0 {
                notes.duplicates += 1;
            }
            *slot += count;
            prev = Some((source.to_owned(), target.to_owned()));
        }
        Ok((Self::from_adjacency(adjacency), notes))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let (index, notes) = Self::read_tsv(BufReader::new(File::open(path)?))?;
        notes.warn(&path.display().to_string());
        Ok(index)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_tsv(BufWriter::new(File::create(path)?))
    }
}
