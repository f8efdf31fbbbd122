use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use edgeideal::betti::hochster_betti_table;
use edgeideal::complex::SimplicialComplex;
use edgeideal::indpoly::independence_polynomial;
use edgeideal::morse::greedy_acyclic_matching;
use edgeideal::{Field, Graph, GUARD_PRIME};
use edgeideal_bench::seeded_graph;

fn bench_hochster(c: &mut Criterion) {
    let g = Graph::cycle(8).unwrap();
    c.bench_function("hochster/c8", |b| {
        b.iter(|| hochster_betti_table(black_box(&g), Field::Rational).unwrap())
    });
}

fn bench_homology(c: &mut Criterion) {
    let delta = SimplicialComplex::independence_complex(&Graph::cycle(12).unwrap());
    let mut group = c.benchmark_group("homology/delta_c12");
    group.bench_function("q", |b| {
        b.iter(|| delta.reduced_homology(black_box(Field::Rational)).unwrap())
    });
    group.bench_function("gf", |b| {
        b.iter(|| delta.reduced_homology(black_box(Field::Gf(GUARD_PRIME))).unwrap())
    });
    group.finish();
}

fn bench_indpoly(c: &mut Criterion) {
    let g = seeded_graph(18, 0.2, 18).unwrap();
    c.bench_function("indpoly/random_n18", |b| {
        b.iter(|| independence_polynomial(black_box(&g)))
    });
}

fn bench_maximal_independent_sets(c: &mut Criterion) {
    let g = seeded_graph(18, 0.2, 18).unwrap();
    c.bench_function("mis/random_n18", |b| {
        b.iter(|| black_box(&g).maximal_independent_sets().unwrap())
    });
}

fn bench_greedy_matching(c: &mut Criterion) {
    let delta = SimplicialComplex::independence_complex(&Graph::cycle(9).unwrap());
    c.bench_function("morse/greedy_delta_c9", |b| {
        b.iter(|| greedy_acyclic_matching(black_box(&delta), Some(1)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_hochster,
    bench_homology,
    bench_indpoly,
    bench_maximal_independent_sets,
    bench_greedy_matching
);
criterion_main!(benches);
