use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use logcert::sequence::{compute_s, f_table, sun_table, BinomialCache, QuotientTable};
use logcert::sun;

fn direct_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("compute_s");
    for n in [50u64, 200, 500] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| compute_s(black_box(n))));
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("tables");
    group.sample_size(20);
    for upto in [100usize, 300] {
        group.bench_with_input(BenchmarkId::new("sun_table", upto), &upto, |b, &upto| b.iter(|| sun_table(upto)));
        group.bench_with_input(BenchmarkId::new("f_table", upto), &upto, |b, &upto| b.iter(|| f_table(upto)));
        group.bench_with_input(BenchmarkId::new("binomial_cache", upto), &upto, |b, &upto| {
            b.iter(|| BinomialCache::new(upto))
        });
    }
    group.finish();
}

fn recurrence(c: &mut Criterion) {
    let s = sun_table(300);
    let initials = s.slice(1, 2).unwrap();
    let rec = sun::three_term_s();
    c.bench_function("extend_three_term_to_300", |b| b.iter(|| rec.extend(&initials, 300).unwrap()));
    c.bench_function("quotients_300", |b| b.iter(|| QuotientTable::from_sequence(&s).unwrap()));
}

criterion_group!(benches, direct_sums, tables, recurrence);
criterion_main!(benches);
