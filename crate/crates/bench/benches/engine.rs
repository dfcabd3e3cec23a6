use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sasaki_core::bilinear::squaring;
use sasaki_core::killing::e_minus_kernel;
use sasaki_core::{build_frame, cliff_form, omega_power, psi_k, sp_basis, KillingConfig};

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernels");
    g.sample_size(10);
    for n in [3, 4] {
        let cfg = KillingConfig::standard(n).unwrap();
        g.bench_with_input(BenchmarkId::new("killing", n), &cfg, |b, cfg| {
            b.iter(|| black_box(cfg.killing_kernel().rank()))
        });
        let f = build_frame(n).unwrap();
        g.bench_with_input(BenchmarkId::new("e_minus", n), &f, |b, f| {
            b.iter(|| black_box(e_minus_kernel(f, 2).unwrap().rank()))
        });
        let alg = sp_basis(n).unwrap();
        g.bench_with_input(BenchmarkId::new("invariant_spinors", n), &alg, |b, alg| {
            b.iter(|| black_box(alg.invariant_spinors().rank()))
        });
    }
    g.finish();
}

fn clifford(c: &mut Criterion) {
    let mut g = c.benchmark_group("clifford");
    for n in [3, 5] {
        let f = build_frame(n).unwrap();
        let w = omega_power(f.params(), (n / 2) as i64);
        let phi = f.fundamental_h(2);
        g.bench_function(BenchmarkId::new("phi2_on_omega", n), |b| {
            b.iter(|| black_box(cliff_form(&phi, &w).unwrap()))
        });
    }
    let q = build_frame(3).unwrap().params();
    let a = psi_k(q, 0).unwrap();
    let b2 = psi_k(q, 1).unwrap();
    g.bench_function("squaring_2_n3", |b| b.iter(|| black_box(squaring(2, &a, &b2).unwrap())));
    g.finish();
}

criterion_group!(benches, kernels, clifford);
criterion_main!(benches);
