use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use flipsort::automaton::{build_ak, count_words_upto};
use flipsort::enumeration::count_popstacked_with;
use flipsort::worstcase::{skew_conjecture_report, verify_bandwidth_theorem};
use flipsort::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn recurrence(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_popstacked");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 60), &60, |b, &n| {
            b.iter(|| count_popstacked_with(exec, black_box(n), false))
        });
    }
    g.finish();
}

fn exhaustive(c: &mut Criterion) {
    let mut g = c.benchmark_group("bandwidth_sweep");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 9), &9, |b, &n| {
            b.iter(|| verify_bandwidth_theorem(exec, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn skew(c: &mut Criterion) {
    let mut g = c.benchmark_group("skew_report");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 16), &16, |b, &n| {
            b.iter(|| skew_conjecture_report(exec, black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn transfer(c: &mut Criterion) {
    let d = build_ak(7);
    let mut g = c.benchmark_group("count_words");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, 40), &40, |b, &n| {
            b.iter(|| count_words_upto(&d, black_box(n), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, recurrence, exhaustive, skew, transfer);
criterion_main!(benches);
