//! Gold-standard evaluation: micro-averaged accuracy, precision, recall and
//! F1 in two modes.
//!
//! * **overall** scores every gold mention, so candidate-selection misses
//!   count against the method;
//! * **disambiguation** first drops mentions whose gold entity is not among
//!   their top-x candidates and rebuilds the document graphs from what is
//!   left, isolating the ranking step.
//!
//! accuracy = correct / mentions in mode, precision = correct / linked
//! mentions, recall = correct / mentions in mode.

mod dataset;
mod metrics;
mod report;

pub use dataset::{load_dataset, read_dataset, read_documents, DatasetLoad, GoldDataset};
pub use metrics::{
    compare_measures, evaluate, AverageRow, EvalCounts, EvalOptions, EvalReport, EvalRow, Metrics,
    Mode,
};
pub use report::ReportFormat;
