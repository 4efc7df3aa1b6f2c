use std::fmt;
use std::ops::AddAssign;
use std::str::FromStr;

use rayon::prelude::*;

use crate::candidates::Candidate;
use crate::centrality::IterativeConfig;
use crate::dict::{EntityLinkIndex, MentionEntityDict};
use crate::error::{Error, Result};
use crate::linker::{in_pool, Document, LinkDecision, Linker, LinkerConfig, Method};

use super::GoldDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Overall,
    Disambiguation,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Overall, Mode::Disambiguation];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Overall => "overall",
            Mode::Disambiguation => "disambiguation",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "overall" => Ok(Mode::Overall),
            "disambiguation" | "dis" => Ok(Mode::Disambiguation),
            _ => Err(Error::argument(format!("unknown evaluation mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub top_x: usize,
    pub iterative: IterativeConfig,
    pub workers: usize,
    /// Disambiguation mode scores on the full document graph instead of
    /// rebuilding it from the retained mentions.
    pub keep_graph: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            top_x: crate::DEFAULT_TOP_X,
            iterative: IterativeConfig::default(),
            workers: 1,
            keep_graph: false,
        }
    }
}

/// Mention tallies behind one report row.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalCounts {
    /// Gold mentions in the dataset.
    pub mentions: u64,
    pub with_candidate: u64,
    pub gold_in_candidates: u64,
    /// Mentions scored in this mode (the accuracy and recall denominator).
    pub evaluated: u64,
    /// Evaluated mentions that received an entity.
    pub linked: u64,
    pub correct: u64,
}

impl AddAssign for EvalCounts {
    fn add_assign(&mut self, o: Self) {
        self.mentions += o.mentions;
        self.with_candidate += o.with_candidate;
        self.gold_in_candidates += o.gold_in_candidates;
        self.evaluated += o.evaluated;
        self.linked += o.linked;
        self.correct += o.correct;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Metrics {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

impl Metrics {
    pub fn from_counts(c: &EvalCounts) -> Self {
        let accuracy = ratio(c.correct, c.evaluated);
        let precision = ratio(c.correct, c.linked);
        let recall = ratio(c.correct, c.evaluated);
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        Metrics {
            accuracy,
            precision,
            recall,
            f1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRow {
    pub dataset: String,
    pub method: Method,
    pub mode: Mode,
    pub counts: EvalCounts,
    pub metrics: Metrics,
}

/// Unweighted mean of one (method, mode) over all datasets.
#[derive(Debug, Clone, PartialEq)]
pub struct AverageRow {
    pub method: Method,
    pub mode: Mode,
    pub datasets: usize,
    pub metrics: Metrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub top_x: usize,
    pub keep_graph: bool,
    pub rows: Vec<EvalRow>,
    pub averages: Vec<AverageRow>,
}

fn tally(
    linker: &Linker<'_>,
    doc: &Document,
    mode: Mode,
    keep_graph: bool,
) -> EvalCounts {
    let candidates = linker.candidates(doc);
    let gold_in: Vec<bool> = doc
        .mentions
        .iter()
        .zip(&candidates)
        .map(|(m, cands)| {
            m.gold
                .as_deref()
                .is_some_and(|g| cands.iter().any(|c| c.entity == g))
        })
        .collect();

    let mut counts = EvalCounts {
        mentions: doc.mentions.len() as u64,
        with_candidate: candidates.iter().filter(|c| !c.is_empty()).count() as u64,
        gold_in_candidates: gold_in.iter().filter(|&&b| b).count() as u64,
        ..Default::default()
    };

    // (mention index in `doc`, decision)
    let scored: Vec<(usize, LinkDecision)> = match (mode, keep_graph) {
        (Mode::Overall, _) => linker.link_candidates(&candidates).into_iter().enumerate().collect(),
        (Mode::Disambiguation, true) => linker
            .link_candidates(&candidates)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| gold_in[*i])
            .collect(),
        (Mode::Disambiguation, false) => {
            let retained: Vec<usize> = (0..doc.mentions.len()).filter(|&i| gold_in[i]).collect();
            let kept: Vec<Vec<Candidate>> =
                retained.iter().map(|&i| candidates[i].clone()).collect();
            retained
                .into_iter()
                .zip(linker.link_candidates(&kept))
                .collect()
        }
    };

    for (i, decision) in scored {
        counts.evaluated += 1;
        if let Some(entity) = decision.chosen {
            counts.linked += 1;
            if doc.mentions[i].gold.as_deref() == Some(entity.as_str()) {
                counts.correct += 1;
            }
        }
    }
    counts
}

/// Scores one method on one dataset in one mode.
pub fn evaluate(
    dataset: &GoldDataset,
    mentions: &MentionEntityDict,
    links: &EntityLinkIndex,
    method: Method,
    mode: Mode,
    opts: &EvalOptions,
) -> Result<EvalRow> {
    if dataset.mention_count() == 0 {
        return Err(Error::NoMentions);
    }
    let config = LinkerConfig {
        method,
        top_x: opts.top_x,
        iterative: opts.iterative,
    };
    let linker = Linker::new(mentions, links, config)?;
    let counts = in_pool(opts.workers, || {
        dataset
            .documents
            .par_iter()
            .map(|doc| tally(&linker, doc, mode, opts.keep_graph))
            .reduce(EvalCounts::default, |mut a, b| {
                a += b;
                a
            })
    })?;
    Ok(EvalRow {
        dataset: dataset.name.clone(),
        method,
        mode,
        metrics: Metrics::from_counts(&counts),
        counts,
    })
}

/// Runs every method in every mode on every dataset and averages each
/// (method, mode) across datasets.
pub fn compare_measures(
    datasets: &[GoldDataset],
    methods: &[Method],
    modes: &[Mode],
    mentions: &MentionEntityDict,
    links: &EntityLinkIndex,
    opts: &EvalOptions,
) -> Result<EvalReport> {
    if datasets.is_empty() {
        return Err(Error::argument("at least one dataset is required"));
    }
    let mut rows = Vec::new();
    for dataset in datasets {
        for &method in methods {
            for &mode in modes {
                rows.push(evaluate(dataset, mentions, links, method, mode, opts)?);
            }
        }
    }

    let mut averages = Vec::new();
    for &method in methods {
        for &mode in modes {
            let group: Vec<&Metrics> = rows
                .iter()
                .filter(|r| r.method == method && r.mode == mode)
                .map(|r| &r.metrics)
                .collect();
            let k = group.len() as f64;
            let mean = |f: fn(&Metrics) -> f64| group.iter().map(|m| f(m)).sum::<f64>() / k;
            averages.push(AverageRow {
                method,
                mode,
                datasets: group.len(),
                metrics: Metrics {
                    accuracy: mean(|m| m.accuracy),
                    precision: mean(|m| m.precision),
                    recall: mean(|m| m.recall),
                    f1: mean(|m| m.f1),
                },
            });
        }
    }

    Ok(EvalReport {
        top_x: opts.top_x,
        keep_graph: opts.keep_graph,
        rows,
        averages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linker::Mention;

    fn dicts() -> (MentionEntityDict, EntityLinkIndex) {
        let m = "a\tA1\t5\na\tA2\t3\nb\tB1\t4\nb\tB2\t2\nc\tC1\t1\n";
        let l = "A2\tB2\t1\nB2\tA2\t1\n";
        (
            MentionEntityDict::read_tsv(m.as_bytes()).unwrap().0,
            EntityLinkIndex::read_tsv(l.as_bytes()).unwrap().0,
        )
    }

    /// 4 mentions: "a"→A1 (popular, correct), "b"→B1 (correct),
    /// "c"→Z (gold not a candidate), "zz" (no candidate).
    fn hand_scored() -> GoldDataset {
        GoldDataset {
            name: "hand".into(),
            documents: vec![Document {
                id: "1".into(),
                mentions: vec![
                    Mention::new("a").with_gold("A1"),
                    Mention::new("b").with_gold("B1"),
                    Mention::new("c").with_gold("Z"),
                    Mention::new("zz").with_gold("Q"),
                ],
            }],
        }
    }

    #[test]
    fn hand_scored_overall() {
        let (m, l) = dicts();
        let row = evaluate(&hand_scored(), &m, &l, Method::Popularity, Mode::Overall, &EvalOptions::default()).unwrap();
        assert_eq!(row.counts.mentions, 4);
        assert_eq!(row.counts.with_candidate, 3);
        assert_eq!(row.counts.linked, 3);
        assert_eq!(row.counts.correct, 2);
        assert_eq!(row.metrics.accuracy, 0.5);
        assert_eq!(row.metrics.precision, 2.0 / 3.0);
        assert_eq!(row.metrics.recall, 0.5);
        let f1 = 2.0 * (2.0 / 3.0) * 0.5 / (2.0 / 3.0 + 0.5);
        assert!((row.metrics.f1 - f1).abs() < 1e-15);
    }

    #[test]
    fn hand_scored_disambiguation() {
        let (m, l) = dicts();
        let row = evaluate(&hand_scored(), &m, &l, Method::Popularity, Mode::Disambiguation, &EvalOptions::default()).unwrap();
        assert_eq!(row.counts.evaluated, 2);
        assert_eq!(row.metrics.accuracy, 1.0);
        assert_eq!(row.metrics.precision, 1.0);
        assert_eq!(row.metrics.recall, 1.0);
        assert_eq!(row.metrics.f1, 1.0);
    }

    #[test]
    fn rebuilt_versus_kept_graph() {
        // Gold A2/B2 are linked to each other; "c" is unwinnable and dropped.
        let (m, l) = dicts();
        let ds = GoldDataset {
            name: "g".into(),
            documents: vec![Document {
                id: "1".into(),
                mentions: vec![
                    Mention::new("a").with_gold("A2"),
                    Mention::new("b").with_gold("B2"),
                    Mention::new("c").with_gold("nope"),
                ],
            }],
        };
        let method = Method::Centrality(crate::Measure::Degree);
        for keep_graph in [false, true] {
            let opts = EvalOptions { keep_graph, ..Default::default() };
            let row = evaluate(&ds, &m, &l, method, Mode::Disambiguation, &opts).unwrap();
            assert_eq!(row.counts.evaluated, 2);
            assert_eq!(row.counts.correct, 2);
        }
    }

    #[test]
    fn empty_dataset_is_refused() {
        let (m, l) = dicts();
        let ds = GoldDataset { name: "e".into(), documents: vec![] };
        assert!(matches!(
            evaluate(&ds, &m, &l, Method::Popularity, Mode::Overall, &EvalOptions::default()),
            Err(Error::NoMentions)
        ));
    }

    #[test]
    fn averages_of_identical_datasets_equal_each_row() {
        let (m, l) = dicts();
        let ds = [hand_scored(), hand_scored()];
        let report = compare_measures(&ds, &Method::ALL, &Mode::BOTH, &m, &l, &EvalOptions::default()).unwrap();
        assert_eq!(report.rows.len(), 24);
        assert_eq!(report.averages.len(), 12);
        for avg in &report.averages {
            let row = report
                .rows
                .iter()
                .find(|r| r.method == avg.method && r.mode == avg.mode)
                .unwrap();
            assert_eq!(avg.metrics, row.metrics);
        }
    }

    #[test]
    fn averages_are_arithmetic_means() {
        let (m, l) = dicts();
        let mut other = hand_scored();
        other.name = "other".into();
        other.documents[0].mentions.truncate(1); // accuracy 1.0
        let report = compare_measures(
            &[hand_scored(), other],
            &[Method::Popularity],
            &[Mode::Overall],
            &m,
            &l,
            &EvalOptions::default(),
        )
        .unwrap();
        assert_eq!(report.averages[0].metrics.accuracy, (0.5 + 1.0) / 2.0);
        assert_eq!(report.averages[0].metrics.precision, (2.0 / 3.0 + 1.0) / 2.0);
    }
}
