use std::collections::HashSet;
use std::io::{self, BufRead};

use crate::error::{Error, Result};

/// Prefix of a page header line, followed by the page title.
pub const PAGE_MARKER: &str = "#PAGE\t";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outlink {
    pub anchor: String,
    pub target: String,
}

/// One page of the corpus: its title (an entity identifier) and its outlinks
/// in document order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPage {
    pub title: String,
    pub outlinks: Vec<Outlink>,
}

impl RawPage {
    pub fn new(title: impl Into<String>) -> Self {
        RawPage {
            title: title.into(),
            outlinks: Vec::new(),
        }
    }

    pub fn with_link(mut self, anchor: impl Into<String>, target: impl Into<String>) -> Self {
        self.outlinks.push(Outlink {
            anchor: anchor.into(),
            target: target.into(),
        });
        self
    }
}

/// Streaming reader over the page-record format.
///
/// Holds a single line buffer and the page under construction, so memory use
/// does not grow with the number of records. The first malformed record ends
/// the stream with an error carrying the record index and byte offset.
pub struct CorpusReader<R> {
    reader: R,
    line: String,
    offset: u64,
    record: usize,
    done: bool,
}

pub fn parse_corpus<R: BufRead>(reader: R) -> CorpusReader<R> {
    CorpusReader::new(reader)
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R) -> Self {
        CorpusReader {
            reader,
            line: String::new(),
            offset: 0,
            record: 0,
            done: false,
        }
    }

    /// Reads the next line without its terminator. Returns the byte offset of
    /// the line start, or `None` at end of input.
    fn next_line(&mut self) -> Result<Option<u64>> {
        self.line.clear();
        let start = self.offset;
        let read = match self.reader.read_line(&mut self.line) {
            Ok(n) => n,
            Err(e) if e.kind() == io::ErrorKind::InvalidData => {
                return Err(self.error(start, "invalid UTF-8"));
            }
            Err(e) => return Err(e.into()),
        };
        if read == 0 {
            return Ok(None);
        }
        self.offset += read as u64;
        if self.line.ends_with('\n') {
            self.line.pop();
            if self.line.ends_with('\r') {
                self.line.pop();
            }
        }
        Ok(Some(start))
    }

    fn error(&self, offset: u64, message: impl Into<String>) -> Error {
        Error::Corpus {
            record: self.record,
            offset,
            message: message.into(),
        }
    }

    fn read_page(&mut self) -> Result<Option<RawPage>> {
        // skip blank separator lines
        let header_at = loop {
            match self.next_line()? {
                None => return Ok(None),
                Some(_) if self.line.trim().is_empty() => continue,
                Some(at) => break at,
            }
        };
        let title = match self.line.strip_prefix(PAGE_MARKER) {
            Some(t) => t,
            None => return Err(self.error(header_at, "expected `#PAGE<TAB><title>` header")),
        };
        if title.trim().is_empty() {
            return Err(self.error(header_at, "empty page title"));
        }
        if title.contains('\t') {
            return Err(self.error(header_at, "page title contains a tab"));
        }
        let mut page = RawPage::new(title);

        while let Some(at) = self.next_line()? {
            if self.line.trim().is_empty() {
                break;
            }
            if self.line.starts_with(PAGE_MARKER) {
                return Err(self.error(at, "page header inside a record (missing blank line)"));
            }
            let Some((anchor, target)) = self.line.split_once('\t') else {
                return Err(self.error(at, "outlink line must be `<anchor><TAB><target>`"));
            };
            if anchor.trim().is_empty() {
                return Err(self.error(at, "empty anchor text"));
            }
            if target.trim().is_empty() {
                return Err(self.error(at, "empty target title"));
            }
            if target.contains('\t') {
                return Err(self.error(at, "too many fields in outlink line"));
            }
            page.outlinks.push(Outlink {
                anchor: anchor.to_owned(),
                target: target.to_owned(),
            });
        }
        Ok(Some(page))
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<RawPage>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.read_page() {
            Ok(Some(page)) => {
                self.record += 1;
                Some(Ok(page))
            }
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

/// First pass for `--strict-targets`: the set of all page titles.
pub fn collect_titles<R: BufRead>(reader: R) -> Result<HashSet<String>> {
    parse_corpus(reader).map(|p| p.map(|p| p.title)).collect()
}
