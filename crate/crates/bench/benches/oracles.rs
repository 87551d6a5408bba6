use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ryser_core::oracles::{max_partial_cover_distinct, min_component_cover, nu, tau, tau_by_enumeration};
use ryser_core::partial::is_affine_blowup;
use ryser_core::planes::{affine_plane, blowup_graph, truncated_projective_plane};
use ryser_core::OracleLimits;

fn hypergraph_oracles(c: &mut Criterion) {
    let limits = OracleLimits::default();
    let mut group = c.benchmark_group("truncated_plane");
    for q in [2, 3, 4] {
        let h = truncated_projective_plane(q).unwrap();
        group.bench_with_input(BenchmarkId::new("tau", q), &h, |b, h| b.iter(|| tau(h, &limits).unwrap()));
        group.bench_with_input(BenchmarkId::new("nu", q), &h, |b, h| b.iter(|| nu(h, &limits).unwrap()));
    }
    let h = truncated_projective_plane(3).unwrap();
    group.bench_function("tau_by_enumeration/3", |b| b.iter(|| tau_by_enumeration(black_box(&h)).unwrap()));
    group.finish();
}

fn component_oracles(c: &mut Criterion) {
    let limits = OracleLimits {
        max_vertices: 64,
        max_components: 256,
        ..OracleLimits::default()
    };
    let mut group = c.benchmark_group("blowup");
    for (q, b) in [(2, 3), (3, 1), (3, 2), (4, 1)] {
        let g = blowup_graph(&affine_plane(q).unwrap(), b).unwrap();
        let id = format!("q{q}_b{b}");
        group.bench_with_input(BenchmarkId::new("min_component_cover", &id), &g, |bench, g| {
            bench.iter(|| min_component_cover(g, &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("max_partial_cover", &id), &g, |bench, g| {
            bench.iter(|| max_partial_cover_distinct(g, &limits).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("is_affine_blowup", &id), &g, |bench, g| {
            bench.iter(|| is_affine_blowup(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, hypergraph_oracles, component_oracles);
criterion_main!(benches);
