use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use curv::cellcomplex::{attach_two_cells, CellComplex, CycleCriterion};
use curv::curvature::{forman_all, maxmin_forman, ollivier_edge};
use curv::{Cycle, Rational, Scalar, WeightedGraph};
use curv_bench::six_vertex_graph;

/// A circulant graph on `n` vertices with connections at distance 1 and 2 —
/// the same local shape as the six-vertex example, but larger.
fn circulant<S: Scalar>(n: i64) -> WeightedGraph<S> {
    let vertices: Vec<(i64, S)> = (0..n).map(|v| (v, S::one())).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for step in 1..=2 {
            edges.push((v, (v + step) % n, S::one()));
        }
    }
    WeightedGraph::new(vertices, edges).expect("valid graph")
}

fn unit_complex<S: Scalar>(g: &WeightedGraph<S>) -> CellComplex<S> {
    let cells: Vec<(Cycle, S)> = g
        .enumerate_cycles(CycleCriterion::MaxLength(5))
        .into_iter()
        .map(|c| (c, S::one()))
        .collect();
    attach_two_cells(g.clone(), &cells).expect("valid complex")
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_cycles");
    let six = six_vertex_graph::<Rational>();
    group.bench_function("six_vertex", |b| {
        b.iter(|| black_box(&six).enumerate_cycles(CycleCriterion::MaxLength(5)))
    });
    let big = circulant::<Rational>(24);
    group.bench_function("circulant_24", |b| {
        b.iter(|| black_box(&big).enumerate_cycles(CycleCriterion::MaxLength(5)))
    });
    group.finish();
}

fn bench_edge_curvature(c: &mut Criterion) {
    let mut group = c.benchmark_group("edge_curvature");
    let exact = unit_complex(&six_vertex_graph::<Rational>());
    let float = unit_complex(&six_vertex_graph::<f64>());
    // Edge (3, 4), in the middle of the graph.
    let edge = 4;
    group.bench_function("forman_all_rational", |b| {
        b.iter(|| forman_all(black_box(&exact), 1, None))
    });
    group.bench_function("ollivier_edge_rational", |b| {
        b.iter(|| ollivier_edge(black_box(&exact), edge, None).expect("solvable"))
    });
    group.bench_function("ollivier_edge_float", |b| {
        b.iter(|| ollivier_edge(black_box(&float), edge, None).expect("solvable"))
    });
    group.finish();
}

fn bench_maxmin(c: &mut Criterion) {
    let mut group = c.benchmark_group("maxmin_forman");
    group.sample_size(20);
    let exact = six_vertex_graph::<Rational>();
    let exact_cycles = exact.enumerate_cycles(CycleCriterion::MaxLength(5));
    group.bench_function("six_vertex_rational", |b| {
        b.iter(|| maxmin_forman(black_box(&exact), &exact_cycles, None).expect("solvable"))
    });
    let float = six_vertex_graph::<f64>();
    let float_cycles = float.enumerate_cycles(CycleCriterion::MaxLength(5));
    group.bench_function("six_vertex_float", |b| {
        b.iter(|| maxmin_forman(black_box(&float), &float_cycles, None).expect("solvable"))
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_edge_curvature, bench_maxmin);
criterion_main!(benches);
