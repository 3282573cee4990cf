use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use triforest_core::{
    build_complete_multipartite, spanning_tree_count_kirchhoff, total_rooted_forest_count,
    total_rooted_forest_oracle, tripartite_tree_count, PartSizes,
};

fn bench_spanning_trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("spanning_trees");
    group.sample_size(10);
    for size in [2u32, 4, 8, 16] {
        let parts = PartSizes::new(size, size, size);
        let graph = build_complete_multipartite(parts).expect("nonzero sizes");
        group.bench_with_input(
            BenchmarkId::new("closed_form", size),
            &parts,
            |b, &parts| {
                b.iter(|| tripartite_tree_count(black_box(parts)).expect("nonzero sizes"));
            },
        );
        group.bench_with_input(BenchmarkId::new("determinant", size), &graph, |b, graph| {
            b.iter(|| spanning_tree_count_kirchhoff(black_box(graph)));
        });
    }
    group.finish();
}

fn bench_total_rooted_forests(c: &mut Criterion) {
    let mut group = c.benchmark_group("total_rooted_forests");
    group.sample_size(10);
    for size in [2u32, 4, 8] {
        let parts = PartSizes::new(size, size, size);
        let graph = build_complete_multipartite(parts).expect("nonzero sizes");
        group.bench_with_input(
            BenchmarkId::new("closed_form", size),
            &parts,
            |b, &parts| {
                b.iter(|| total_rooted_forest_count(black_box(parts)).expect("nonzero sizes"));
            },
        );
        group.bench_with_input(BenchmarkId::new("determinant", size), &graph, |b, graph| {
            b.iter(|| total_rooted_forest_oracle(black_box(graph)));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_spanning_trees, bench_total_rooted_forests);
criterion_main!(benches);
