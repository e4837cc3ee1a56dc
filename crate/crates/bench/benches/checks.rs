use criterion::{criterion_group, criterion_main, Criterion};

use logcert::logbehavior::{
    check_log_convex_range, nth_root_logconcave_check, theorem21_check, CheckMode, PrecisionPolicy,
};
use logcert::sequence::{sun_table, QuotientTable};
use logcert::{run_claims, sun, CertifyConfig, ClaimId, Strictness};

fn range_checks(c: &mut Criterion) {
    let s = sun_table(301);
    let q = QuotientTable::from_sequence(&s).unwrap();
    let (a, b, cc) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
    c.bench_function("log_convex_1_300", |bch| {
        bch.iter(|| check_log_convex_range(&s, Strictness::Strict, 1, 300).unwrap())
    });
    c.bench_function("theorem21_1_300", |bch| {
        bch.iter(|| theorem21_check(&a, &b, &cc, 0, &q, 300, Strictness::Strict).unwrap())
    });
}

fn nth_roots(c: &mut Criterion) {
    let s = sun_table(301);
    let mut group = c.benchmark_group("nth_root_logconcave");
    group.sample_size(10);
    group.bench_function("exact_2_60", |b| {
        b.iter(|| nth_root_logconcave_check(&s, 2, 60, CheckMode::Exact, PrecisionPolicy::default()).unwrap())
    });
    group.bench_function("interval_61_300", |b| {
        b.iter(|| nth_root_logconcave_check(&s, 61, 300, CheckMode::Interval, PrecisionPolicy::default()).unwrap())
    });
    group.finish();
}

fn symbolic_claims(c: &mut Criterion) {
    let config = CertifyConfig::default().only(&[ClaimId::C11, ClaimId::C12]);
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    group.bench_function("symbolic", |b| b.iter(|| run_claims(&config).unwrap()));
    group.finish();
}

criterion_group!(benches, range_checks, nth_roots, symbolic_claims);
criterion_main!(benches);
