//! Popularity prior and top-x candidate pruning.

use serde::Serialize;

use crate::dict::MentionEntityDict;
use crate::error::{Error, Result};

/// Number of candidates kept per mention unless configured otherwise.
pub const DEFAULT_TOP_X: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub entity: String,
    pub count: u64,
    /// `count / Σ counts` over every entity of the mention, retained or not.
    pub popularity: f64,
    /// 1-based position in popularity order.
    pub rank: usize,
}

/// All candidates of `surface` in dictionary order, with `p(e | m)`.
pub fn popularity_scores(dict: &MentionEntityDict, surface: &str) -> Vec<Candidate> {
    let entries = dict.lookup(surface);
    let total: u64 = entries.iter().map(|e| e.count).sum();
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| Candidate {
            entity: e.entity.clone(),
            count: e.count,
            popularity: e.count as f64 / total as f64,
            rank: i + 1,
        })
        .collect()
}

/// Keeps the `x` most popular candidates.
pub fn top_x(mut candidates: Vec<Candidate>, x: usize) -> Result<Vec<Candidate>> {
    if x == 0 {
        return Err(Error::argument("top-x must be at least 1"));
    }
    candidates.truncate(x);
    Ok(candidates)
}
