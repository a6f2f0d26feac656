//! Sequential (one worker) against parallel (all cores, at least two) on the
//! data-parallel workloads. Build with `--no-default-features` to time the
//! fallback with rayon compiled out.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mw_core::census::enumerate_surfaces;
use mw_core::construct::twisted_bundle;
use mw_core::flip::{reduce_seeds, Schedule};
use mw_core::io::catalog;
use mw_core::manifold::{is_combinatorial_manifold, DEFAULT_LINK_BUDGET};
use mw_core::par;

fn workers() -> [(&'static str, usize); 2] {
    let all = std::thread::available_parallelism().map_or(2, |n| n.get()).max(2);
    [("sequential", 1), ("parallel", all)]
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census_surfaces_n8");
    g.sample_size(10);
    for (name, threads) in workers() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &threads, |b, &t| {
            b.iter(|| par::install(t, || enumerate_surfaces(8).unwrap().total()))
        });
    }
    g.finish();
}

fn reduce(c: &mut Criterion) {
    let tb = twisted_bundle(3).unwrap();
    let seeds: Vec<u64> = (1..=8).collect();
    let schedule = Schedule::default();
    let mut g = c.benchmark_group("reduce_8_seeds");
    g.sample_size(10);
    for (name, threads) in workers() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &threads, |b, &t| {
            b.iter(|| par::install(t, || reduce_seeds(&tb, &seeds, 5_000, &schedule).unwrap().stats.best))
        });
    }
    g.finish();
}

fn links(c: &mut Criterion) {
    let s3xs2 = catalog::entry("S3xS2-a-12").unwrap().complex;
    let mut g = c.benchmark_group("vertex_links_s3xs2");
    g.sample_size(10);
    for (name, threads) in workers() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &threads, |b, &t| {
            b.iter(|| par::install(t, || is_combinatorial_manifold(&s3xs2, DEFAULT_LINK_BUDGET).is_yes()))
        });
    }
    g.finish();
}

criterion_group!(benches, census, reduce, links);
criterion_main!(benches);
