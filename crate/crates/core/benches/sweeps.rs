//! Sequential versus parallel execution of the main sweeps.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gt_core::group::GroupParams;
use gt_core::hilbert::hf_trace_oracle_with;
use gt_core::invariants::graded_basis_with;
use gt_core::verify::verify_range;
use gt_core::wlp::wlp_failure_check_with;
use gt_core::Strategy;

fn strategies() -> Vec<(&'static str, Strategy)> {
    vec![
        ("sequential", Strategy::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Strategy::Parallel),
    ]
}

fn wlp_trials(c: &mut Criterion) {
    let mut g = c.benchmark_group("wlp_trials");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    let p = GroupParams::with_default_a(12).unwrap();
    for (name, s) in strategies() {
        g.bench_function(BenchmarkId::new(name, "d=12, 8 trials"), |b| {
            b.iter(|| wlp_failure_check_with(black_box(&p), 0, 8, s).unwrap())
        });
    }
    g.finish();
}

fn hilbert_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("hilbert_sweep");
    g.sample_size(10);
    let p = GroupParams::with_default_a(15).unwrap();
    for (name, s) in strategies() {
        g.bench_function(BenchmarkId::new(name, "trace d=15, t=3"), |b| {
            b.iter(|| hf_trace_oracle_with(black_box(&p), 3, s).unwrap())
        });
        g.bench_function(BenchmarkId::new(name, "basis d=15, t=3"), |b| {
            b.iter(|| graded_basis_with(black_box(15), 3, s).unwrap())
        });
    }
    g.finish();
}

fn verify_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_sweep");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    let ds: Vec<u32> = (3..=10).collect();
    for (name, s) in strategies() {
        g.bench_function(BenchmarkId::new(name, "d=3..10"), |b| {
            b.iter(|| verify_range(black_box(&ds), None, 0, 2, s).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, wlp_trials, hilbert_sweep, verify_sweep);
criterion_main!(benches);
