use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orbit_atlas::checks::{self, CheckOptions};
use orbit_atlas::classifier::{self, SphericalPairTable};
use orbit_atlas::exec::Execution;
use orbit_atlas::partitions::Family;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn classify_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_orbits");
    let orbits: Vec<_> = [Family::B, Family::C, Family::D]
        .into_iter()
        .flat_map(|f| classifier::family_orbits(f, 20, false))
        .collect();
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, orbits.len()), &orbits, |b, orbits| {
            b.iter(|| classifier::classify_orbits(orbits, SphericalPairTable::embedded(), exec).unwrap())
        });
    }
    group.finish();
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_candidates");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "D16"), |b| {
            b.iter(|| classifier::enumerate_candidates_with(Family::D, 16, false, exec).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_suites");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = CheckOptions { max_dim: 6, oracle_bound: 6, trials: 4, seed: 0, exec };
        group.bench_function(BenchmarkId::new(name, "bound 6"), |b| b.iter(|| checks::oracle_suites(&opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, classify_all, enumerate, oracle);
criterion_main!(benches);
