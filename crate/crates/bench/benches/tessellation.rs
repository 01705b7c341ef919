use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind::disk::enumerate_disk;
use dedekind::enumeration::{enumerate_halfplane, numerators};
use dedekind::membership::{orbit_bfs, reduce_to_base};
use dedekind::rational::int;
use dedekind::render::render_svg;
use dedekind_bench::{half_plane_config, unit_window_symbols};

fn enumeration(c: &mut Criterion) {
    c.bench_function("numerators/72", |b| b.iter(|| numerators(black_box(72))));
    let mut group = c.benchmark_group("enumerate_halfplane");
    for n_max in [20, 100, 500] {
        group.bench_with_input(BenchmarkId::from_parameter(n_max), &n_max, |b, &n| {
            b.iter(|| enumerate_halfplane(n, &int(-2), &int(2)))
        });
    }
    group.finish();
    c.bench_function("enumerate_disk/200", |b| b.iter(|| enumerate_disk(black_box(200))));
}

fn reduction(c: &mut Criterion) {
    let symbols = unit_window_symbols(100);
    c.bench_function("reduce_to_base/n<=100", |b| {
        b.iter(|| {
            for s in &symbols {
                black_box(reduce_to_base(s).unwrap());
            }
        })
    });
    c.bench_function("orbit_bfs/13x20", |b| b.iter(|| orbit_bfs(black_box(13), 20)));
}

fn rendering(c: &mut Criterion) {
    let mut group = c.benchmark_group("render_svg");
    for n_max in [8, 72] {
        let config = half_plane_config(n_max);
        group.bench_with_input(BenchmarkId::from_parameter(n_max), &config, |b, cfg| b.iter(|| render_svg(cfg)));
    }
    group.finish();
}

criterion_group!(benches, enumeration, reduction, rendering);
criterion_main!(benches);
