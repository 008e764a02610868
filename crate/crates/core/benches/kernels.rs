//! Benchmarks for the compute-heavy kernels.  The catalog fan-out and the
//! multidegree trial loop are data-parallel when the `parallel` feature is
//! enabled (the default); run the suite a second time with
//! `cargo bench --no-default-features` to compare against the sequential
//! fallback.  Benchmark names carry the active mode so the two reports can
//! be diffed directly.

use criterion::{criterion_group, criterion_main, Criterion};

use cremona_core::catalog::{entry, verify_table, Level};
use cremona_core::cremona::multidegree;
use cremona_core::groebner::buchberger;
use cremona_core::MonomialOrder;

#[cfg(feature = "parallel")]
const MODE: &str = "parallel";
#[cfg(not(feature = "parallel"))]
const MODE: &str = "sequential";

fn bench_verify_table(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("verify_table/{MODE}"));
    g.sample_size(10);
    g.bench_function("p3_fast", |b| {
        b.iter(|| {
            for (id, r) in verify_table(Some("P3"), Level::Fast, 7) {
                r.unwrap_or_else(|e| panic!("{id}: {e}"));
            }
        })
    });
    g.bench_function("p4_fast", |b| {
        b.iter(|| {
            for (id, r) in verify_table(Some("P4"), Level::Fast, 7) {
                r.unwrap_or_else(|e| panic!("{id}: {e}"));
            }
        })
    });
    g.finish();
}

fn bench_multidegree(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("multidegree/{MODE}"));
    g.sample_size(10);
    let f4 = entry("J4_4").unwrap().adjoint_map().unwrap();
    g.bench_function("p3_map", |b| b.iter(|| multidegree(&f4, 7, 3).unwrap()));
    let f5 = entry("J5_9").unwrap().adjoint_map().unwrap();
    g.bench_function("p4_map", |b| b.iter(|| multidegree(&f5, 7, 3).unwrap()));
    g.finish();
}

fn bench_groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("groebner/{MODE}"));
    g.sample_size(10);
    let f = entry("J5_9").unwrap().adjoint_map().unwrap();
    let gens = f.components().to_vec();
    g.bench_function("base_ideal_gb", |b| {
        b.iter(|| buchberger(&gens, MonomialOrder::DegRevLex))
    });
    g.finish();
}

criterion_group!(benches, bench_verify_table, bench_multidegree, bench_groebner);
criterion_main!(benches);
