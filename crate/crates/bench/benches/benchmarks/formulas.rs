use std::hint::black_box;

use criterion::{criterion_group, BenchmarkId, Criterion};
use maxhilb::{hilb2_verdict, hilb_betti_series};
use maxhilb_bench::grid_profiles;

fn verdict_grid(c: &mut Criterion) {
    let profiles = grid_profiles(20, 200);
    c.bench_function("hilb2_verdict grid r<=20 b2<=200", |b| {
        b.iter(|| {
            for p in &profiles {
                black_box(hilb2_verdict(p).unwrap());
            }
        })
    });
}

fn goettsche(c: &mut Criterion) {
    let mut group = c.benchmark_group("goettsche k3");
    for n in [2usize, 20, 100] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| hilb_betti_series(black_box([1, 0, 22, 0, 1]), n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, verdict_grid, goettsche);
