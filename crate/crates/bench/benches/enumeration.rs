use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use yfrieze_core::enumerate::{enumerate_arithmetic_yfriezes, SearchConfig};
use yfrieze_core::frieze::enumerate_friezes;

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-yfriezes");
    group.sample_size(20);
    for (width, bound) in [(3usize, 1000u64), (4, 200), (5, 200)] {
        let cfg = SearchConfig::new(width, bound).unwrap();
        group.bench_function(format!("width-{width}-bound-{bound}"), |b| {
            b.iter(|| enumerate_arithmetic_yfriezes(black_box(&cfg)).unwrap())
        });
    }
    group.finish();
}

fn triangulations(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-friezes");
    group.sample_size(20);
    for width in [5usize, 7] {
        group.bench_function(format!("width-{width}"), |b| {
            b.iter(|| enumerate_friezes(black_box(width)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(enumeration, searches, triangulations);
criterion_main!(enumeration);
