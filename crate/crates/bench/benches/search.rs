use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use earlab_bench::instance;
use earlab_core::oracles::{
    chromatic_oracles, kernel_oracle, longest_path_oracle, quasi_kernel_oracle,
};
use earlab_core::oriented::{oriented_coloring_le3, search_tight_le3, uniqueness_census};
use earlab_core::{find_le_decomposition, proper_3_coloring, small_quasi_kernel, EarMode};

fn census(c: &mut Criterion) {
    c.bench_function("uniqueness_census", |b| b.iter(uniqueness_census));
}

fn decomposition_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_le_decomposition");
    for ears in [2, 4, 6] {
        let (d, _) = instance(3, ears, 1);
        group.bench_with_input(BenchmarkId::from_parameter(d.n()), &d, |b, d| {
            b.iter(|| find_le_decomposition(d, 3, 10_000_000, EarMode::AllowCycles).unwrap())
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let (d, e) = instance(3, 20, 2);
    c.bench_function("oriented_coloring_le3", |b| {
        b.iter(|| oriented_coloring_le3(&d, &e).unwrap())
    });
    c.bench_function("small_quasi_kernel", |b| {
        b.iter(|| small_quasi_kernel(&d, &e).unwrap())
    });
    c.bench_function("proper_3_coloring", |b| {
        b.iter(|| proper_3_coloring(&d, &e).unwrap())
    });
}

fn oracles(c: &mut Criterion) {
    let (d, _) = instance(2, 2, 3);
    assert!(d.n() <= earlab_core::oracles::CHROMATIC_CAP);
    let mut group = c.benchmark_group("oracles");
    group.sample_size(20);
    group.bench_function("kernel", |b| b.iter(|| kernel_oracle(&d).unwrap()));
    group.bench_function("quasi_kernel", |b| {
        b.iter(|| quasi_kernel_oracle(&d).unwrap())
    });
    group.bench_function("chromatic", |b| b.iter(|| chromatic_oracles(&d).unwrap()));
    group.bench_function("longest_path", |b| {
        b.iter(|| longest_path_oracle(&d).unwrap())
    });
    group.finish();
}

fn tight_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("tight_search");
    group.sample_size(10);
    group.bench_function("four_ears", |b| {
        b.iter(|| search_tight_le3(4, true, 2_000_000).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    census,
    decomposition_search,
    constructions,
    oracles,
    tight_search
);
criterion_main!(benches);
