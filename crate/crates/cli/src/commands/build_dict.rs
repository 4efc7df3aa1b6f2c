use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::time::Instant;

use centilink_core::dict::{cache_path, LINKS_FILE, MENTIONS_FILE};
use centilink_core::ingest::{collect_titles, parse_corpus, retain_known_targets, DictionaryBuilder};
use centilink_core::linker::in_pool;
use rayon::prelude::*;

use super::{open, with_output};
use crate::args::BuildDictArgs;
use crate::error::{CliError, Context};

pub fn build_dict(args: &BuildDictArgs) -> Result<(), CliError> {
    let workers = args.workers.unwrap_or(1);
    if workers == 0 {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    let start = Instant::now();

    let titles = if args.strict_targets {
        let sets = in_pool(workers, || {
            args.corpus
                .par_iter()
                .map(|p| collect_titles(open(p)?).context(p.display()))
                .collect::<Result<Vec<_>, _>>()
        })
        .context("thread pool")??;
        let titles: HashSet<String> = sets.into_iter().flatten().collect();
        log::info!("strict targets: {} known titles", titles.len());
        Some(titles)
    } else {
        None
    };

    let shards = in_pool(workers, || {
        args.corpus
            .par_iter()
            .map(|p| build_shard(p, titles.as_ref()))
            .collect::<Result<Vec<_>, _>>()
    })
    .context("thread pool")??;
    let mut builder = DictionaryBuilder::new();
    for shard in shards {
        builder.merge(shard);
    }
    let dicts = builder.finish();

    fs::create_dir_all(&args.out_dir).map_err(|e| CliError::io(&args.out_dir, e))?;
    let mentions_path = args.out_dir.join(MENTIONS_FILE);
    let links_path = args.out_dir.join(LINKS_FILE);
    for stale in [cache_path(&mentions_path), cache_path(&links_path)] {
        if stale.exists() {
            fs::remove_file(&stale).map_err(|e| CliError::io(&stale, e))?;
        }
    }
    dicts.mentions.save(&mentions_path).context(mentions_path.display())?;
    dicts.links.save(&links_path).context(links_path.display())?;
    log::info!(
        "built dictionaries from {} shard(s) in {:.2?}",
        args.corpus.len(),
        start.elapsed()
    );

    let s = dicts.stats;
    with_output(None, |w| {
        writeln!(w, "pages\t{}", s.pages)?;
        writeln!(w, "pages_with_links\t{}", s.pages_with_links)?;
        writeln!(w, "mention_pairs\t{}", s.mention_pairs)?;
        writeln!(w, "distinct_mentions\t{}", s.distinct_mentions)?;
        writeln!(w, "mention_entity_pairs\t{}", dicts.mentions.pair_count())?;
        writeln!(w, "link_edges\t{}", dicts.links.edge_total())
    })
}

fn build_shard(path: &Path, titles: Option<&HashSet<String>>) -> Result<DictionaryBuilder, CliError> {
    let mut builder = DictionaryBuilder::new();
    for page in parse_corpus(open(path)?) {
        let mut page = page.context(path.display())?;
        if let Some(titles) = titles {
            retain_known_targets(&mut page, titles);
        }
        builder.add_page(&page);
    }
    Ok(builder)
}
