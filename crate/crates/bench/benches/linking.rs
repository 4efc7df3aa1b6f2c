use centilink_core::eval::{evaluate, EvalOptions, Mode};
use centilink_core::synth::synthetic_world;
use centilink_core::{Linker, LinkerConfig, Method};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn linking(c: &mut Criterion) {
    let world = synthetic_world(200, 9);

    let mut group = c.benchmark_group("link_document");
    for method in Method::ALL {
        let linker = Linker::new(&world.mentions, &world.links, LinkerConfig::with_method(method)).unwrap();
        group.bench_function(method.as_str(), |b| {
            b.iter(|| {
                for doc in &world.dataset.documents {
                    black_box(linker.link_document(doc));
                }
            })
        });
    }
    group.finish();

    c.bench_function("evaluate/degree/overall", |b| {
        b.iter(|| {
            evaluate(
                &world.dataset,
                &world.mentions,
                &world.links,
                Method::Centrality(centilink_core::Measure::Degree),
                Mode::Overall,
                &EvalOptions::default(),
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, linking);
criterion_main!(benches);
