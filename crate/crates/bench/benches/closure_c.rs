use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gradual_core::random;

fn closure_and_interior(c: &mut Criterion) {
    let mut group = c.benchmark_group("gradual_subset");
    for breaks in [4, 16, 64] {
        let mut rng = random::rng(breaks as u64);
        let sigma = random::gradual_subset(&mut rng, 64, breaks);
        group.bench_with_input(BenchmarkId::new("closure_c", breaks), &sigma, |b, s| b.iter(|| black_box(s).closure_c()));
        group.bench_with_input(BenchmarkId::new("interior_d", breaks), &sigma, |b, s| b.iter(|| black_box(s).interior_d()));
    }
    group.finish();
}

criterion_group!(benches, closure_and_interior);
criterion_main!(benches);
