use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polysimp::{simplify_global_frechet, simplify_global_frechet_reference, simplify_local, LocalMeasure};
use polysimp_bench::walk_fixture;

fn global(c: &mut Criterion) {
    let mut group = c.benchmark_group("global_frechet");
    group.sample_size(10);
    for n in [32, 64, 128, 256] {
        let (curve, delta, metric) = walk_fixture(n, 11);
        group.bench_with_input(BenchmarkId::new("fast", n), &n, |b, _| {
            b.iter(|| simplify_global_frechet(&curve, delta, metric).unwrap())
        });
        if n <= 64 {
            group.bench_with_input(BenchmarkId::new("reference", n), &n, |b, _| {
                b.iter(|| simplify_global_frechet_reference(&curve, delta, metric).unwrap())
            });
        }
    }
    group.finish();
}

fn local(c: &mut Criterion) {
    let mut group = c.benchmark_group("local");
    group.sample_size(10);
    for n in [64, 128, 256] {
        let (curve, delta, metric) = walk_fixture(n, 12);
        for (name, measure) in [("hausdorff", LocalMeasure::Hausdorff), ("frechet", LocalMeasure::Frechet)] {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| simplify_local(&curve, delta, metric, measure).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, global, local);
criterion_main!(benches);
