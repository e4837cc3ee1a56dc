use std::sync::OnceLock;

use logcert::logbehavior::{check_log_convex_range, theorem21_check};
use logcert::sequence::{check_guo_liu_identity, compute_s, f_table, sun_table};
use logcert::{sun, QuotientTable, Rational, SequenceTable, Strictness};
use num_bigint::BigInt;
use proptest::prelude::*;

const N_MAX: usize = 120;

fn s() -> &'static SequenceTable {
    static TABLE: OnceLock<SequenceTable> = OnceLock::new();
    TABLE.get_or_init(|| sun_table(N_MAX))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_from_any_window_matches_direct_sums(start in 1usize..N_MAX - 2) {
        let initials = s().slice(start, start + 1).unwrap();
        let extended = sun::three_term_s().extend(&initials, N_MAX).unwrap();
        prop_assert_eq!(extended.first_mismatch(&s().slice(start, N_MAX).unwrap()), None);
    }

    #[test]
    fn recurrences_annihilate_the_table(n in 1usize..N_MAX - 3) {
        prop_assert!(sun::four_term_s().residual(s(), n).unwrap().is_zero());
        prop_assert!(sun::three_term_s().residual(s(), n).unwrap().is_zero());
    }

    #[test]
    fn values_increase_and_are_log_convex(n in 1usize..N_MAX) {
        let (prev, cur, next) = (s().get(n - 1).unwrap(), s().get(n).unwrap(), s().get(n + 1).unwrap());
        prop_assert!(cur > prev);
        prop_assert!(prev * next > cur * cur);
    }

    #[test]
    fn table_agrees_with_direct_sum(n in 0usize..N_MAX) {
        prop_assert_eq!(s().get(n).unwrap(), &compute_s(n as u64));
    }

    #[test]
    fn identity_linking_f_and_s(n in 0u64..80) {
        prop_assert!(check_guo_liu_identity(n).unwrap());
    }

    #[test]
    fn quotients_stay_below_nine(n in 1usize..N_MAX) {
        let q = QuotientTable::from_sequence(s()).unwrap();
        let s_n = q.get(n).unwrap();
        prop_assert!(s_n < &Rational::from_integer(9));
        prop_assert_eq!(s_n * Rational::from(s().get(n - 1).unwrap()), Rational::from(s().get(n).unwrap()));
    }

    #[test]
    fn root_interval_criterion_implies_log_convexity(big_n in 0i64..60, len in 1i64..50) {
        let q = QuotientTable::from_sequence(s()).unwrap();
        let hi = big_n + len;
        let (a, b, c) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
        let criterion = theorem21_check(&a, &b, &c, big_n, &q, hi, Strictness::Strict).unwrap();
        prop_assert!(criterion.verdict.is_pass());
        let convex = check_log_convex_range(s(), Strictness::Weak, (big_n + 1) as usize, hi as usize).unwrap();
        prop_assert!(convex.verdict.is_pass());
    }
}

#[test]
fn f_is_integral_over_the_range() {
    let f = f_table(60).unwrap();
    assert_eq!(f.get(0), Some(&BigInt::from(0)));
    assert_eq!(f.len(), 61);
}
