use arcperm_bench::{diagrams, words};
use arcperm_core::census::census;
use arcperm_core::generation::{
    complete_table, enumerate_generators, generators_oracle, DEFAULT_CAP,
};
use arcperm_core::inversion::{perms_from_word, perms_from_word_oracle};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn generator_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("generators");
    for (name, b) in diagrams() {
        group.bench_with_input(BenchmarkId::new("blocks", name), &b, |bench, b| {
            bench.iter(|| enumerate_generators(b, DEFAULT_CAP).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("table", name), &b, |bench, b| {
            bench.iter(|| complete_table(b, DEFAULT_CAP).unwrap())
        });
        if b.n() <= 8 {
            group.bench_with_input(BenchmarkId::new("oracle", name), &b, |bench, b| {
                bench.iter(|| generators_oracle(b).unwrap())
            });
        }
    }
    group.finish();
}

fn word_inversion(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert");
    for w in words() {
        let label = w.to_string();
        group.bench_with_input(BenchmarkId::new("search", &label), &w, |bench, w| {
            bench.iter(|| perms_from_word(w).unwrap())
        });
        if w.len() <= 8 {
            group.bench_with_input(BenchmarkId::new("oracle", &label), &w, |bench, w| {
                bench.iter(|| perms_from_word_oracle(w).unwrap())
            });
        }
    }
    group.finish();
}

fn census_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| census(n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, generator_routes, word_inversion, census_sweep);
criterion_main!(benches);
