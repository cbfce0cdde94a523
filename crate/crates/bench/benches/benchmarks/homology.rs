use std::hint::black_box;

use criterion::{criterion_group, Criterion};
use maxhilb::f2::surfaces;
use maxhilb_bench::torus_squared;

fn product_betti(c: &mut Criterion) {
    let complex = torus_squared();
    let chain = complex.chain_complex().unwrap();
    c.bench_function("betti T2 x T2 sparse", |b| b.iter(|| black_box(&chain).betti()));
    let mut group = c.benchmark_group("betti T2 x T2 dense");
    group.sample_size(10);
    group.bench_function("dense", |b| b.iter(|| black_box(&chain).betti_dense()));
    group.finish();
}

fn subdivision(c: &mut Criterion) {
    let genus3 = surfaces::orientable_surface(3);
    c.bench_function("barycentric subdivision genus 3", |b| b.iter(|| black_box(&genus3).barycentric_subdivision()));
}

criterion_group!(benches, product_betti, subdivision);
