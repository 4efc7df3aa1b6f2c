use std::path::Path;

use centilink_core::eval::read_documents;
use centilink_core::linker::link_corpus;
use centilink_core::{Linker, LinkerConfig, Method};
use serde::Serialize;

use super::{load_dictionaries, open, with_output};
use crate::args::LinkArgs;
use crate::config::RunConfig;
use crate::error::{CliError, Context};

#[derive(Serialize)]
struct DocumentOut<'a> {
    id: &'a str,
    links: Vec<LinkOut<'a>>,
}

#[derive(Serialize)]
struct LinkOut<'a> {
    mention: &'a str,
    entity: Option<&'a str>,
    score: f64,
    fallback: bool,
}

pub fn link(args: &LinkArgs, config: Option<&Path>) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(config, &args.tuning, args.measure.as_deref(), None, false)?;
    let method: Method = cfg
        .measure
        .as_deref()
        .unwrap_or("degree")
        .parse()
        .map_err(|e: centilink_core::Error| CliError::usage(e.to_string()))?;
    let (mentions, links) = load_dictionaries(cfg.dict_dir()?)?;
    let docs = read_documents(open(&args.input)?).context(args.input.display())?;
    let linker = Linker::new(
        &mentions,
        &links,
        LinkerConfig {
            method,
            top_x: cfg.top_x,
            iterative: cfg.iterative,
        },
    )
    .context("linker")?;
    log::info!("linking {} documents with {method}, top-{}", docs.len(), cfg.top_x);

    let results = link_corpus(&linker, &docs, cfg.workers).context("linking")?;
    with_output(args.out.as_deref(), |w| {
        for (doc, result) in docs.iter().zip(&results) {
            let out = DocumentOut {
                id: &result.id,
                links: result
                    .decisions
                    .iter()
                    .map(|d| LinkOut {
                        mention: &doc.mentions[d.mention].surface,
                        entity: d.chosen.as_deref(),
                        score: d.score,
                        fallback: d.fallback_used,
                    })
                    .collect(),
            };
            serde_json::to_writer(&mut *w, &out)?;
            writeln!(w)?;
        }
        Ok(())
    })?;

    if let Some(path) = &args.dump_graph {
        with_output(Some(path), |w| {
            for doc in &docs {
                let graph = linker.graph(&linker.candidates(doc));
                w.write_all(graph.to_dot(&doc.id).as_bytes())?;
            }
            Ok(())
        })?;
    }
    Ok(())
}
