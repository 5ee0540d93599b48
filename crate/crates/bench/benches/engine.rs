use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use syzygy_bench::{dense_cubics, power_family, sharpness_example};
use syzygy_core::{resolve, unmixed_part, FieldSpec, Ideal};

fn fresh(i: &Ideal) -> Ideal {
    Ideal::new(i.ring(), i.gens().to_vec()).unwrap()
}

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for field in [FieldSpec::default_prime(), FieldSpec::Rationals] {
        let i = dense_cubics(field);
        g.bench_with_input(BenchmarkId::new("dense_cubics", field), &i, |b, i| {
            b.iter(|| black_box(fresh(i).gb().len()))
        });
    }
    g.finish();
}

fn resolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolve");
    g.sample_size(10);
    let j = sharpness_example(FieldSpec::default_prime());
    g.bench_function("sharpness_example", |b| b.iter(|| black_box(resolve(&fresh(&j)).unwrap().length())));
    for e in [2, 4] {
        let i = power_family(FieldSpec::default_prime(), e);
        g.bench_with_input(BenchmarkId::new("power_family", e), &i, |b, i| {
            b.iter(|| black_box(resolve(&fresh(i)).unwrap().length()))
        });
    }
    g.finish();
}

fn unmixed(c: &mut Criterion) {
    let mut g = c.benchmark_group("unmixed_part");
    g.sample_size(10);
    let j = sharpness_example(FieldSpec::default_prime());
    g.bench_function("sharpness_example", |b| b.iter(|| black_box(unmixed_part(&fresh(&j)).unwrap().ngens())));
    g.finish();
}

criterion_group!(benches, groebner, resolutions, unmixed);
criterion_main!(benches);
