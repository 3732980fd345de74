use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use wha_bench::spread_element;
use wha_core::recoupling::RecouplingTables;
use wha_core::verify::{default_specs, registry, run_suite, Context};
use wha_core::{Conventions, WhaAlgebra};

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    g.sample_size(10);
    for r in [3u32, 4, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(r), &r, |b, &r| {
            b.iter(|| WhaAlgebra::new(black_box(r)).unwrap())
        });
    }
    g.finish();
}

fn recoupling(c: &mut Criterion) {
    c.bench_function("recoupling_tables_r6", |b| {
        b.iter(|| {
            let t = RecouplingTables::new(black_box(6));
            t.sixj(1, 1, 2, 1, 1, 2).unwrap()
        })
    });
}

fn products(c: &mut Criterion) {
    let alg = WhaAlgebra::new(5).unwrap();
    let x = spread_element(&alg, 0, 7);
    let y = spread_element(&alg, 3, 11);
    c.bench_function("multiply_r5", |b| {
        b.iter(|| alg.multiply(black_box(&x), black_box(&y)).unwrap())
    });
    c.bench_function("comultiply_twice_r5", |b| {
        b.iter(|| alg.comultiply_twice(black_box(&x)))
    });
}

fn forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("forms");
    g.sample_size(10);
    g.bench_function("qtilde_r5", |b| {
        b.iter(|| WhaAlgebra::new(5).unwrap().qtilde_matrix().determinant())
    });
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let ctx = Context::for_level(4, Conventions::default()).unwrap();
    let checks: Vec<_> = registry()
        .iter()
        .filter(|c| c.suite() == "coribbon")
        .collect();
    let specs = default_specs(&checks, 4, 500, 42);
    g.bench_function("coribbon_r4", |b| {
        b.iter(|| run_suite(&ctx, &specs).unwrap())
    });
    g.finish();
}

criterion_group!(benches, build, recoupling, products, forms, suite);
criterion_main!(benches);
