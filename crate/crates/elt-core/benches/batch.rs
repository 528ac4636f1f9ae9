//! Parallel vs. sequential corpus sweeps.
//!
//! Run with `cargo bench -p elt-core`. The `parallel` variants dispatch to
//! rayon (default features); the `sequential` variants always use the
//! single-threaded path, so the pair measures the speedup on this machine.

use criterion::{criterion_group, criterion_main, Criterion};

use elt_core::batch::{self, BatchOptions};
use elt_core::generators::{self, SplitMix64};
use elt_core::graph::Graph;

fn options() -> BatchOptions {
    BatchOptions {
        timing: false,
        ..Default::default()
    }
}

fn random_corpus(n: usize, count: usize) -> Vec<(String, Graph)> {
    (0..count)
        .map(|k| {
            let g = generators::random_graph(n, 0.4, 0xbe9c + k as u64).unwrap();
            (format!("g{k}"), g)
        })
        .collect()
}

fn anchored_corpus(count: usize) -> Vec<(String, Graph)> {
    let mut rng = SplitMix64::new(0xa9c);
    let mut graphs = Vec::with_capacity(count);
    while graphs.len() < count {
        let spec = generators::sample_spec(3, &mut rng);
        let seed = rng.next_u64();
        if let Ok(instance) = generators::anchored_instance(&spec, seed) {
            graphs.push((format!("i{}", graphs.len()), instance.graph));
        }
    }
    graphs
}

fn bench_theorem_sweep(c: &mut Criterion) {
    let graphs = random_corpus(10, 150);
    let opts = options();
    let mut group = c.benchmark_group("theorem-sweep-150x10");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| batch::theorem_batch(graphs.clone(), &opts))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| batch::theorem_batch_seq(graphs.clone(), &opts))
    });
    group.finish();
}

fn bench_lemma_sweep(c: &mut Criterion) {
    let graphs = anchored_corpus(100);
    let opts = options();
    let mut group = c.benchmark_group("lemma-sweep-100");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| batch::lemma_batch(graphs.clone(), &opts))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| batch::lemma_batch_seq(graphs.clone(), &opts))
    });
    group.finish();
}

fn bench_analyze_sweep(c: &mut Criterion) {
    let graphs = random_corpus(9, 60);
    let opts = options();
    let mut group = c.benchmark_group("analyze-sweep-60x9");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| batch::analyze_batch(graphs.clone(), &opts))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| batch::analyze_batch_seq(graphs.clone(), &opts))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_theorem_sweep,
    bench_lemma_sweep,
    bench_analyze_sweep
);
criterion_main!(benches);
