use logcert::exact::{
    eventual_sign_bound, in_quadratic_root_interval, rational_cmp, sign_for_all_n_geq, Membership, SignVerdict,
};
use logcert::logbehavior::{check_log_concave_range, check_log_convex_range, theorem21_check};
use logcert::sequence::{binomial, compute_f, compute_s, sun_table, SequenceError};
use logcert::{sun, Polynomial, QuotientTable, Rational, SequenceTable, Strictness};
use num_bigint::BigInt;
use std::cmp::Ordering;

fn table(values: &[i64]) -> SequenceTable {
    SequenceTable::from_i64("z", 0, values)
}

#[test]
fn constant_sequence_is_only_weakly_log_convex() {
    let z = table(&[1; 8]);
    assert!(check_log_convex_range(&z, Strictness::Weak, 1, 6).unwrap().verdict.is_pass());
    let strict = check_log_convex_range(&z, Strictness::Strict, 1, 6).unwrap();
    assert_eq!(strict.verdict.witness(), Some(1));
}

#[test]
fn arithmetic_progression_is_log_concave() {
    let z = SequenceTable::from_i64("z", 1, &[1, 2, 3, 4]);
    let convex = check_log_convex_range(&z, Strictness::Strict, 2, 3).unwrap();
    assert_eq!(convex.verdict.witness(), Some(2));
    assert!(check_log_concave_range(&z, Strictness::Strict, 2, 3).unwrap().verdict.is_pass());
}

#[test]
fn factorials_are_log_convex_not_log_concave() {
    let z = table(&[1, 1, 2, 6, 24, 120]);
    assert!(check_log_convex_range(&z, Strictness::Weak, 1, 4).unwrap().verdict.is_pass());
    // 1 * 2 > 1^2 already at n = 1; n = 2 (1 * 6 > 2^2) is the next violation.
    let concave = check_log_concave_range(&z, Strictness::Weak, 1, 4).unwrap();
    assert_eq!(concave.verdict.witness(), Some(1));
    let concave = check_log_concave_range(&z, Strictness::Weak, 2, 4).unwrap();
    assert_eq!(concave.verdict.witness(), Some(2));
}

#[test]
fn geometric_sequence_is_an_equality_case() {
    let z = table(&[3, 6, 12, 24, 48, 96]);
    for weak in [check_log_convex_range(&z, Strictness::Weak, 1, 4), check_log_concave_range(&z, Strictness::Weak, 1, 4)] {
        assert!(weak.unwrap().verdict.is_pass());
    }
    for strict in
        [check_log_convex_range(&z, Strictness::Strict, 1, 4), check_log_concave_range(&z, Strictness::Strict, 1, 4)]
    {
        assert_eq!(strict.unwrap().verdict.witness(), Some(1));
    }
}

#[test]
fn fibonacci_quotients_leave_the_root_interval() {
    let fib = table(&[1, 1, 2, 3, 5, 8, 13, 21, 34]);
    let q = QuotientTable::from_sequence(&fib).unwrap();
    let (one, neg) = (Polynomial::from_ints(&[1]), Polynomial::from_ints(&[-1]));
    let r = theorem21_check(&one, &neg, &neg, 0, &q, 7, Strictness::Weak).unwrap();
    // q_2 = 2 and 2^2 - 2 - 1 = 1 > 0, so q_2 lies above (1 + sqrt 5)/2.
    assert_eq!(r.detail("(iii)").unwrap().verdict.witness(), Some(2));
}

#[test]
fn direct_sums() {
    assert_eq!(binomial(4, 2), 6u32.into());
    assert_eq!(binomial(6, 3), 20u32.into());
    assert_eq!(binomial(2, 3), 0u32.into());
    let s: Vec<BigInt> = (0..4).map(compute_s).collect();
    assert_eq!(s, [1, 7, 55, 465].map(BigInt::from));
    let f: Vec<BigInt> = (0..3).map(|n| compute_f(n).unwrap()).collect();
    assert_eq!(f, [0, 7, 52].map(BigInt::from));
}

#[test]
fn residuals_at_first_index() {
    let s = sun_table(6);
    // 84 * 55 - 759 * 7 + 693 * 1 = 0
    assert!(sun::three_term_s().residual(&s, 1).unwrap().is_zero());
    // 9 * 1 - 87 * 7 + 87 * 55 - 9 * 465 = 0
    assert!(sun::four_term_s().residual(&s, 0).unwrap().is_zero());
}

#[test]
fn extension_from_corrupted_initials_is_rejected() {
    let good = SequenceTable::from_i64("S", 1, &[7, 55]);
    let extended = sun::three_term_s().extend(&good, 3).unwrap();
    assert_eq!(extended.get(3), Some(&BigInt::from(465)));
    assert_eq!(sun::three_term_s().extend(&good, 2).unwrap(), good);

    // (759 * 56 - 693 * 7) / 84 = 37653 / 84 is not an integer.
    let bad = SequenceTable::from_i64("S", 1, &[7, 56]);
    let err = sun::three_term_s().extend(&bad, 3).unwrap_err();
    assert!(matches!(err, SequenceError::NonExactDivision { index: 3, .. }), "{err}");
}

#[test]
fn sign_certificates() {
    assert_eq!(eventual_sign_bound(&Polynomial::from_ints(&[-5, 1])).unwrap(), 6);
    let small = Polynomial::from_ints(&[15, -40, -88]);
    assert_eq!(eventual_sign_bound(&small).unwrap(), 2);
    assert_eq!(sign_for_all_n_geq(&small, 1, Strictness::Strict).unwrap().verdict, SignVerdict::AllNegative);

    let quartic = Polynomial::from_ints(&[-171, -1626, -918, 1464, 1152]);
    assert!(eventual_sign_bound(&quartic).unwrap() <= 3);
    let from_one = sign_for_all_n_geq(&quartic, 1, Strictness::Strict).unwrap();
    assert_eq!(from_one.verdict, SignVerdict::Fails { witness: 1 });
    let from_two = sign_for_all_n_geq(&quartic, 2, Strictness::Strict).unwrap();
    assert_eq!(from_two.verdict, SignVerdict::AllPositive);

    let delta = sign_for_all_n_geq(&sun::delta(), 0, Strictness::Weak).unwrap();
    assert!(matches!(delta.verdict, SignVerdict::AllPositive | SignVerdict::AllNonnegative));
}

#[test]
fn delta_at_one() {
    // Sum of the coefficients of the degree-8 discriminant.
    let sum: i64 = [16384, 81920, 143360, 101888, 19328, -13120, -6884, -84, 441].iter().sum();
    assert_eq!(sum, 343233);
    assert_eq!(sun::delta().eval_int(1), Rational::from_integer(343233));
    assert_eq!(343233, 9 * 38137);
}

#[test]
fn root_interval_membership_at_one() {
    let (a, b, c) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
    let at = |q: i64| in_quadratic_root_interval(&a, &b, &c, 1, &Rational::from_integer(q)).unwrap();
    assert_eq!(at(7), Membership::Inside);
    assert_eq!(at(1), Membership::Outside);
    assert_eq!(at(9), Membership::Outside);
}

#[test]
fn quotient_comparisons() {
    let (lo, s2, hi) = (Rational::new(9, 2), Rational::new(55, 7), Rational::new(63, 8));
    assert_eq!(rational_cmp(&s2, &hi), Ordering::Less);
    assert_eq!(rational_cmp(&lo, &s2), Ordering::Less);
    assert_eq!(rational_cmp(&s2, &s2), Ordering::Equal);
    let q = QuotientTable::from_sequence(&sun_table(3)).unwrap();
    assert_eq!(q.get(1), Some(&Rational::from_integer(7)));
    assert_eq!(q.get(2), Some(&s2));
}
