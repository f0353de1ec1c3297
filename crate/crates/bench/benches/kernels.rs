use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qmacd_bench::{compositions, dense_input};
use qmacd_core::dunkl::apply_di;
use qmacd_core::hecke::{apply_ti, apply_yi};
use qmacd_core::kernel::build_ka;
use qmacd_core::macdonald::{nonsym_macdonald_oracle, MacdonaldCache};

fn operators(c: &mut Criterion) {
    let mut g = c.benchmark_group("operators");
    for n in [2, 3] {
        let f = dense_input(n, 4);
        g.bench_with_input(BenchmarkId::new("T1", n), &f, |b, f| b.iter(|| apply_ti(black_box(f), 1).unwrap()));
        g.bench_with_input(BenchmarkId::new("Y1", n), &f, |b, f| b.iter(|| apply_yi(black_box(f), 1).unwrap()));
        g.bench_with_input(BenchmarkId::new("D1", n), &f, |b, f| b.iter(|| apply_di(black_box(f), 1).unwrap()));
    }
    g.finish();
}

fn macdonald(c: &mut Criterion) {
    let mut g = c.benchmark_group("macdonald");
    g.sample_size(10);
    let etas = compositions(3, 4);
    g.bench_function("recursion n=3 weight 4", |b| {
        b.iter(|| {
            let cache = MacdonaldCache::new();
            for eta in &etas {
                black_box(cache.get(eta));
            }
        })
    });
    g.bench_function("oracle n=3 weight 4", |b| {
        b.iter(|| {
            for eta in &etas {
                black_box(nonsym_macdonald_oracle(eta).unwrap());
            }
        })
    });
    g.finish();
}

fn kernel(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernel");
    g.sample_size(10);
    for (n, degree) in [(2, 4), (3, 3)] {
        g.bench_function(format!("build n={n} N={degree}"), |b| b.iter(|| build_ka(n, degree).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, operators, macdonald, kernel);
criterion_main!(benches);
