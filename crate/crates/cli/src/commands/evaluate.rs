use std::path::Path;

use centilink_core::eval::{compare_measures, load_dataset, EvalOptions, Mode, ReportFormat};
use centilink_core::Method;

use super::{load_dictionaries, with_output};
use crate::args::EvaluateArgs;
use crate::config::RunConfig;
use crate::error::{CliError, Context};

pub fn evaluate(args: &EvaluateArgs, config: Option<&Path>) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(
        config,
        &args.tuning,
        args.measure.as_deref(),
        args.mode.as_deref(),
        args.dis_keep_graph,
    )?;
    let usage = |e: centilink_core::Error| CliError::usage(e.to_string());
    let methods: Vec<Method> = match cfg.measure.as_deref().unwrap_or("all") {
        "all" => Method::ALL.to_vec(),
        m => vec![m.parse().map_err(usage)?],
    };
    let modes: Vec<Mode> = match cfg.mode.as_deref().unwrap_or("both") {
        "both" => Mode::BOTH.to_vec(),
        m => vec![m.parse().map_err(usage)?],
    };

    let (mentions, links) = load_dictionaries(cfg.dict_dir()?)?;
    let mut datasets = Vec::with_capacity(args.dataset.len());
    for path in &args.dataset {
        let load = load_dataset(path).context(path.display())?;
        if load.rejected > 0 {
            log::warn!(
                "{}: skipped {} mention(s) without a surface or gold entity",
                path.display(),
                load.rejected
            );
        }
        if load.dataset.mention_count() == 0 {
            return Err(CliError::Data {
                context: path.display().to_string(),
                source: centilink_core::Error::NoMentions,
            });
        }
        log::info!(
            "{}: {} documents, {} mentions",
            load.dataset.name,
            load.dataset.documents.len(),
            load.dataset.mention_count()
        );
        datasets.push(load.dataset);
    }

    let opts = EvalOptions {
        top_x: cfg.top_x,
        iterative: cfg.iterative,
        workers: cfg.workers,
        keep_graph: cfg.keep_graph,
    };
    let report = compare_measures(&datasets, &methods, &modes, &mentions, &links, &opts).context("evaluation")?;
    let format = args
        .report
        .as_deref()
        .map(ReportFormat::from_path)
        .unwrap_or(ReportFormat::Tsv);
    let text = report.render(format);
    with_output(args.report.as_deref(), |w| w.write_all(text.as_bytes()))
}
