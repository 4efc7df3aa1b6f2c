use std::path::Path;
use std::time::{Duration, Instant};

use centilink_core::centrality::score;
use centilink_core::synth::random_digraph;
use centilink_core::Measure;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::with_output;
use crate::args::{BenchArgs, Tuning};
use crate::config::RunConfig;
use crate::error::CliError;

pub fn bench(args: &BenchArgs, config: Option<&Path>) -> Result<(), CliError> {
    let tuning = Tuning {
        damping: args.damping,
        tol: args.tol,
        max_iter: args.max_iter,
        ..Tuning::default()
    };
    let cfg = RunConfig::resolve(config, &tuning, args.measure.as_deref(), None, false)?;
    let measures: Vec<Measure> = match cfg.measure.as_deref().unwrap_or("all") {
        "all" => Measure::ALL.to_vec(),
        m => vec![m
            .parse()
            .map_err(|e: centilink_core::Error| CliError::usage(e.to_string()))?],
    };
    if args.nodes == 0 || args.graphs == 0 {
        return Err(CliError::usage("--nodes and --graphs must be at least 1"));
    }
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::usage("--density must lie in [0, 1]"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let graphs: Vec<_> = (0..args.graphs)
        .map(|_| random_digraph(args.nodes, args.density, &mut rng))
        .collect();
    let mean_edges = graphs.iter().map(|g| g.edge_count()).sum::<usize>() as f64 / graphs.len() as f64;

    let mut rows = Vec::new();
    for &measure in &measures {
        let mut times = Vec::with_capacity(graphs.len());
        let mut iterations = 0usize;
        for g in &graphs {
            let start = Instant::now();
            let scores = score(g, measure, &cfg.iterative);
            times.push(start.elapsed());
            iterations += scores.iterations_used.unwrap_or(0);
        }
        let total: Duration = times.iter().sum();
        let iters = if measure.is_iterative() {
            format!("{:.1}", iterations as f64 / graphs.len() as f64)
        } else {
            "-".to_owned()
        };
        rows.push((
            measure,
            ms(total) / times.len() as f64,
            times.iter().copied().min().map(ms).unwrap_or(0.0),
            times.iter().copied().max().map(ms).unwrap_or(0.0),
            iters,
        ));
    }

    with_output(None, |w| {
        writeln!(
            w,
            "# {} graphs, {} nodes, edge probability {}, mean {:.1} edges, seed {}",
            args.graphs, args.nodes, args.density, mean_edges, args.seed
        )?;
        writeln!(w, "{:<12} {:>12} {:>12} {:>12} {:>10}", "measure", "mean_ms", "min_ms", "max_ms", "iters")?;
        for (measure, mean, min, max, iters) in &rows {
            writeln!(w, "{:<12} {:>12.3} {:>12.3} {:>12.3} {:>10}", measure.as_str(), mean, min, max, iters)?;
        }
        Ok(())
    })
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
