use std::fmt::Write as _;
use std::path::Path;

use super::{EvalReport, Metrics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Tsv,
    Markdown,
}

impl ReportFormat {
    /// Markdown for `.md`, TSV otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("md") | Some("markdown") => ReportFormat::Markdown,
            _ => ReportFormat::Tsv,
        }
    }
}

fn pct(x: f64) -> String {
    format!("{:.2}", 100.0 * x)
}

fn metric_cells(m: &Metrics) -> [String; 4] {
    [pct(m.accuracy), pct(m.f1), pct(m.precision), pct(m.recall)]
}

impl EvalReport {
    fn header_lines(&self) -> Vec<String> {
        let graph = if self.keep_graph {
            "scored on the full document graph"
        } else {
            "document graphs rebuilt from the retained mentions"
        };
        vec![
            "centilink evaluation report (micro-averaged, values in percent)".to_owned(),
            "accuracy = correct / mentions in mode; precision = correct / linked mentions; recall = correct / mentions in mode; F = harmonic mean of precision and recall".to_owned(),
            "precision and recall denominators are this tool's definitions and may differ from other published tables".to_owned(),
            format!(
                "overall = all gold mentions; disambiguation = mentions whose gold entity is among the top-{} candidates, {graph}",
                self.top_x
            ),
        ]
    }

    pub fn render(&self, format: super::ReportFormat) -> String {
        match format {
            ReportFormat::Tsv => self.to_tsv(),
            ReportFormat::Markdown => self.to_markdown(),
        }
    }

    /// One row per (dataset, method, mode). Cross-dataset averages follow
    /// with dataset `average` when there is more than one dataset.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for line in self.header_lines() {
            let _ = writeln!(s, "# {line}");
        }
        s.push_str("dataset\tmethod\tmode\taccuracy\tf1\tprecision\trecall\tmentions\twith_candidate\tgold_in_candidates\tlinked\tcorrect\n");
        for r in &self.rows {
            let c = &r.counts;
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.dataset,
                r.method,
                r.mode,
                metric_cells(&r.metrics).join("\t"),
                c.mentions,
                c.with_candidate,
                c.gold_in_candidates,
                c.linked,
                c.correct,
            );
        }
        if self.dataset_count() > 1 {
            for a in &self.averages {
                let _ = writeln!(
                    s,
                    "average\t{}\t{}\t{}\t-\t-\t-\t-\t-",
                    a.method,
                    a.mode,
                    metric_cells(&a.metrics).join("\t"),
                );
            }
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Evaluation report\n\n");
        for line in self.header_lines().iter().skip(1) {
            let _ = writeln!(s, "- {line}");
        }
        s.push_str("\n| Dataset | Method | Mode | Accuracy | F | P | R | Mentions | Linked | Correct |\n");
        s.push_str("|---|---|---|---:|---:|---:|---:|---:|---:|---:|\n");
        for r in &self.rows {
            let [a, f, p, rc] = metric_cells(&r.metrics);
            let _ = writeln!(
                s,
                "| {} | {} | {} | {a} | {f} | {p} | {rc} | {} | {} | {} |",
                r.dataset, r.method, r.mode, r.counts.evaluated, r.counts.linked, r.counts.correct
            );
        }
        if self.dataset_count() > 1 {
            let _ = writeln!(
                s,
                "\n## Average over {} datasets\n\n| Method | Mode | Accuracy | F | P | R |\n|---|---|---:|---:|---:|---:|",
                self.dataset_count()
            );
            for a in &self.averages {
                let [acc, f, p, r] = metric_cells(&a.metrics);
                let _ = writeln!(s, "| {} | {} | {acc} | {f} | {p} | {r} |", a.method, a.mode);
            }
        }
        s
    }

    pub fn dataset_count(&self) -> usize {
        let mut names: Vec<&str> = self.rows.iter().map(|r| r.dataset.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        names.len()
    }
}
