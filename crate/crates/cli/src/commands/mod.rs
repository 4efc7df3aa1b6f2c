mod bench;
mod build_dict;
mod evaluate;
mod link;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use centilink_core::dict::{load_entity_index_cached, load_mention_dict_cached, LINKS_FILE, MENTIONS_FILE};
use centilink_core::{EntityLinkIndex, MentionEntityDict};

use crate::args::{Cli, Command};
use crate::error::{CliError, Context};

pub use bench::bench;
pub use build_dict::build_dict;
pub use evaluate::evaluate;
pub use link::link;

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    let config = cli.config.as_deref();
    match &cli.command {
        Command::BuildDict(args) => build_dict(args),
        Command::Link(args) => link(args, config),
        Command::Evaluate(args) => evaluate(args, config),
        Command::Bench(args) => bench(args, config),
    }
}

pub(crate) fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::io(path, e))
}

/// Runs `f` against a buffered writer on `path`, or on standard output.
pub(crate) fn with_output(
    path: Option<&Path>,
    f: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    let shown = path.unwrap_or(Path::new("<stdout>"));
    let result = match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::io(p, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w).and_then(|()| w.flush())
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            f(&mut w).and_then(|()| w.flush())
        }
    };
    result.map_err(|e| CliError::io(shown, e))
}

/// Loads both dictionaries from `dir`, going through the binary caches.
pub(crate) fn load_dictionaries(dir: &Path) -> Result<(MentionEntityDict, EntityLinkIndex), CliError> {
    let start = Instant::now();
    let mentions_path = dir.join(MENTIONS_FILE);
    let links_path = dir.join(LINKS_FILE);
    let mentions = load_mention_dict_cached(&mentions_path).context(mentions_path.display())?;
    let links = load_entity_index_cached(&links_path).context(links_path.display())?;
    log::info!(
        "loaded {} mentions / {} pairs and {} entities / {} links from {} in {:.2?}",
        mentions.len(),
        mentions.pair_count(),
        links.entity_count(),
        links.edge_total(),
        dir.display(),
        start.elapsed()
    );
    Ok((mentions, links))
}
