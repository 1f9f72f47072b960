//! Benchmarks for the hot, non-memoized kernels: canonical labeling, the
//! two coproducts, orientation enumeration, and the subset-expansion and
//! coloring-count oracles. The memoized polynomial entry points are not
//! benchmarked; after the first call they only measure a table lookup.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hopfgraph::coloring::compatible_pair_count;
use hopfgraph::enumerate::{
    acyclic_orientations, antipode_orientation_formula, covering_counts_by_edges,
    totally_acyclic_partial_orientations,
};
use hopfgraph::hopf::{coproduct_bipartition, coproduct_contraction};
use hopfgraph::SimpleGraph;
use hopfgraph_bench::{cube, petersen};

fn bench_canonical_key(c: &mut Criterion) {
    let k5 = SimpleGraph::complete(5).unwrap();
    let q3 = cube();
    let pet = petersen();
    let mut group = c.benchmark_group("canonical_key");
    group.bench_function("k5", |b| b.iter(|| black_box(&k5).canonical_key()));
    group.bench_function("cube", |b| b.iter(|| black_box(&q3).canonical_key()));
    group.bench_function("petersen", |b| b.iter(|| black_box(&pet).canonical_key()));
    group.finish();
}

fn bench_coproducts(c: &mut Criterion) {
    let k5 = SimpleGraph::complete(5).unwrap();
    let c6 = SimpleGraph::cycle(6).unwrap();
    let q3 = cube();
    let mut group = c.benchmark_group("coproduct");
    group.bench_function("bipartition_cube", |b| {
        b.iter(|| coproduct_bipartition(black_box(&q3)))
    });
    group.bench_function("contraction_k5", |b| {
        b.iter(|| coproduct_contraction(black_box(&k5)))
    });
    group.bench_function("contraction_c6", |b| {
        b.iter(|| coproduct_contraction(black_box(&c6)))
    });
    group.finish();
}

fn bench_orientations(c: &mut Criterion) {
    let k4 = SimpleGraph::complete(4).unwrap();
    let c6 = SimpleGraph::cycle(6).unwrap();
    let mut group = c.benchmark_group("orientations");
    group.bench_function("acyclic_k4", |b| b.iter(|| acyclic_orientations(black_box(&k4))));
    group.bench_function("partial_acyclic_k4", |b| {
        b.iter(|| totally_acyclic_partial_orientations(black_box(&k4)).unwrap())
    });
    group.bench_function("partial_acyclic_c6", |b| {
        b.iter(|| totally_acyclic_partial_orientations(black_box(&c6)).unwrap())
    });
    group.bench_function("antipode_formula_k4", |b| {
        b.iter(|| antipode_orientation_formula(black_box(&k4)).unwrap())
    });
    group.finish();
}

fn bench_counting(c: &mut Criterion) {
    let k5 = SimpleGraph::complete(5).unwrap();
    let c6 = SimpleGraph::cycle(6).unwrap();
    let q3 = cube();
    let mut group = c.benchmark_group("counting");
    group.bench_function("covering_counts_k5", |b| {
        b.iter(|| covering_counts_by_edges(black_box(&k5)))
    });
    group.bench_function("covering_counts_cube", |b| {
        b.iter(|| covering_counts_by_edges(black_box(&q3)))
    });
    group.bench_function("pair_count_c6", |b| {
        b.iter(|| compatible_pair_count(black_box(&c6), 3, 3))
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_canonical_key,
    bench_coproducts,
    bench_orientations,
    bench_counting
);
criterion_main!(kernels);
