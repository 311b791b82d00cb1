//! Automorphism engine throughput on the graphs the test suite leans on.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cubecover::extraspecial::ExtraspecialGroup;
use cubecover::{automorphism_group, build_cayley, hypercube, petersen, Graph};

fn cover(r: usize) -> Graph {
    let group = ExtraspecialGroup::from_symmetric_generators(r).unwrap();
    build_cayley(&group, &group.generators()).unwrap()
}

fn engine(c: &mut Criterion) {
    let q6 = hypercube(6).unwrap();
    let pet = petersen();
    let gamma2 = cover(2);
    let gamma3 = cover(3);

    let mut group = c.benchmark_group("aut");
    group.bench_function("petersen", |b| {
        b.iter(|| automorphism_group(black_box(&pet)).unwrap())
    });
    group.bench_function("hypercube-6", |b| {
        b.iter(|| automorphism_group(black_box(&q6)).unwrap())
    });
    group.bench_function("cover-r2", |b| {
        b.iter(|| automorphism_group(black_box(&gamma2)).unwrap())
    });
    group.sample_size(10);
    group.bench_function("cover-r3", |b| {
        b.iter(|| automorphism_group(black_box(&gamma3)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, engine);
criterion_main!(benches);
