use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gradual_core::{random, FiniteGroup};

fn class_product(c: &mut Criterion) {
    let mut group = c.benchmark_group("fuzzy_subgroup");
    for (name, g) in [
        ("S3", FiniteGroup::symmetric(3)),
        ("D4", FiniteGroup::dihedral(4)),
        ("S4", FiniteGroup::symmetric(4)),
    ] {
        let g = Arc::new(g);
        let mut rng = random::rng(7);
        let c1 = random::fuzzy_subgroup(&mut rng, &g).normalize();
        let c2 = random::fuzzy_subgroup(&mut rng, &g).normalize();
        group.bench_with_input(BenchmarkId::new("class_product", name), &(c1, c2), |b, (x, y)| {
            b.iter(|| black_box(x).product(black_box(y)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, class_product);
criterion_main!(benches);
