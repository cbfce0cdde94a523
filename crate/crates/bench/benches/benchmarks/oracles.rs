use std::hint::black_box;

use criterion::{criterion_group, Criterion};
use maxhilb::f2::smith_sequence;
use maxhilb::f2::symsq::{symmetric_square_betti, DEFAULT_SIMPLEX_BUDGET};
use maxhilb::f2::surfaces;
use maxhilb_bench::{octahedron_reflection, torus_shift};

fn smith(c: &mut Criterion) {
    let reflection = octahedron_reflection();
    let shift = torus_shift(8, 4);
    c.bench_function("smith_sequence octahedron reflection", |b| b.iter(|| smith_sequence(black_box(&reflection))));
    c.bench_function("smith_sequence torus shift 8x4", |b| b.iter(|| smith_sequence(black_box(&shift))));
}

fn symmetric_square(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetric square");
    group.sample_size(10);
    let sphere = surfaces::tetrahedron_boundary();
    let torus = surfaces::torus();
    group.bench_function("S2", |b| b.iter(|| symmetric_square_betti(black_box(&sphere), DEFAULT_SIMPLEX_BUDGET)));
    group.bench_function("T2", |b| b.iter(|| symmetric_square_betti(black_box(&torus), DEFAULT_SIMPLEX_BUDGET)));
    group.finish();
}

criterion_group!(benches, smith, symmetric_square);
