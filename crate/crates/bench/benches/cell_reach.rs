use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use polysimp::{solve_cell_reachability, solve_cell_reachability_bruteforce};
use polysimp_bench::cell_reach_fixture;

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("cell_reachability");
    for n in [100, 1_000, 10_000] {
        let inst = cell_reach_fixture(n, 5);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("staircase", n), &inst, |b, inst| {
            b.iter(|| solve_cell_reachability(inst))
        });
        if n <= 1_000 {
            group.bench_with_input(BenchmarkId::new("brute_force", n), &inst, |b, inst| {
                b.iter(|| solve_cell_reachability_bruteforce(inst))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, solvers);
criterion_main!(benches);
