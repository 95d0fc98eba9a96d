//! Each engine on a one-thread pool against the default pool. Built without
//! the `parallel` feature both arms run the sequential code.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPool;
use spatial_claims::game::{grundy_sequence, mirror_strategy, verify_strategy, Seat};
use spatial_claims::poly::enumerate;
use spatial_claims::tiling::{tile_any, torus_search, OrientationMode, DEFAULT_MAX_DIM};

fn pools() -> Vec<(&'static str, ThreadPool)> {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("1-thread", single), ("default", all)]
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, pool) in pools() {
        for sides in [20, 24] {
            group.bench_with_input(BenchmarkId::new(name, sides), &sides, |b, &n| {
                b.iter(|| pool.install(|| enumerate(black_box(n)).unwrap()))
            });
        }
    }
    group.finish();
}

fn bench_mirror(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_mirror");
    group.sample_size(10);
    let n = 25;
    let strategy = mirror_strategy(n).unwrap();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, n), |b| {
            b.iter(|| {
                pool.install(|| verify_strategy(&strategy, black_box(n), Seat::First).unwrap())
            })
        });
    }
    group.finish();
}

fn bench_tiling(c: &mut Criterion) {
    let mut group = c.benchmark_group("tiling");
    group.sample_size(10);
    let family = enumerate(24).unwrap();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, "tile_any/24"), |b| {
            b.iter(|| {
                pool.install(|| {
                    family
                        .iter()
                        .filter_map(|p| tile_any(p, DEFAULT_MAX_DIM))
                        .count()
                })
            })
        });
        group.bench_function(BenchmarkId::new(name, "torus/24"), |b| {
            b.iter(|| {
                pool.install(|| {
                    family
                        .iter()
                        .filter(|p| {
                            torus_search(p, DEFAULT_MAX_DIM, OrientationMode::All8)
                                .unwrap()
                                .is_some()
                        })
                        .count()
                })
            })
        });
    }
    group.finish();
}

fn bench_grundy(c: &mut Criterion) {
    c.bench_function("grundy_sequence/2000", |b| {
        b.iter(|| grundy_sequence(black_box(2000)))
    });
}

criterion_group!(
    benches,
    bench_enumerate,
    bench_mirror,
    bench_tiling,
    bench_grundy
);
criterion_main!(benches);
