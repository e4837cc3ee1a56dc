//! Quotient monotonicity from a three-term recurrence.
//!
//! If `a(n) z_{n+1} + b(n) z_n + c(n) z_{n-1} = 0` with `a(n) > 0`,
//! nonnegative discriminant and every quotient `q_n = z_n / z_{n-1}` lying
//! between the roots `X(n) <= Y(n)` of `a(n) x^2 + b(n) x + c(n)`, then
//! `q_{n+1}` is `q_n` pushed away from the roots, i.e. `q_n <= q_{n+1}`.

use super::{first_violation, require_covered, tail_sign_detail, CheckError, CriterionReport, SubVerdict, Verdict};
use crate::exact::{Polynomial, Quadratic, Rational, RationalFunction, RootPosition, Sign, Strictness};
use crate::sequence::{QuotientTable, Terms};

fn poly(p: &Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p.clone())
}

/// Checks the three conditions and the resulting monotonicity of `q_n` for
/// `N < n <= n_hi`. Conditions (i) and (ii) are certified for all `n > N`;
/// condition (iii) and the conclusion are checked exactly on the range.
pub fn theorem21_check(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    big_n: i64,
    quotients: &QuotientTable,
    n_hi: i64,
    strictness: Strictness,
) -> Result<CriterionReport, CheckError> {
    let lo = (big_n + 1).max(1);
    if n_hi < lo {
        return Err(CheckError::InvalidArgument(format!("empty range {lo}..={n_hi}")));
    }
    require_covered(quotients, lo as usize, n_hi as usize)?;
    let q = |n: i64| quotients.term(n as usize).unwrap();
    let disc = &(b * b) - &(&(a * c) * &Polynomial::constant(Rational::from(4)));

    let cond_i = tail_sign_detail("(i) a(n) > 0 for n > N", &poly(a), big_n + 1, Sign::Positive, Strictness::Strict)?;
    let cond_ii = tail_sign_detail(
        "(ii) b(n)^2 - 4a(n)c(n) >= 0 for n > N",
        &poly(&disc),
        big_n + 1,
        Sign::Positive,
        Strictness::Weak,
    )?;

    let cond_iii = first_violation(lo, n_hi, |n| {
        let qn = q(n);
        match Quadratic::at(a, b, c, n) {
            Err(_) => Some(Verdict::fail(n, a.eval_int(n), Rational::zero())),
            Ok(quad) => {
                let ok = match quad.position(&qn) {
                    RootPosition::Between => true,
                    RootPosition::OnLower | RootPosition::OnUpper => strictness == Strictness::Weak,
                    _ => false,
                };
                (!ok).then(|| Verdict::fail(n, quad.eval(&qn), Rational::zero()))
            }
        }
    });
    let cmp = if strictness == Strictness::Strict { "<" } else { "<=" };
    let cond_iii = SubVerdict::new(format!("(iii) X(n) {cmp} q_n {cmp} Y(n)"), cond_iii)
        .over(lo, n_hi)
        .with_note("decided by the sign of a(n) q_n^2 + b(n) q_n + c(n); lhs is that value");

    // The conclusion only follows for quotients of a solution of the recurrence.
    let has_next = |n: i64| quotients.term(n as usize + 1).is_some();
    let rec_hi = (lo..=n_hi).rev().find(|&n| has_next(n)).unwrap_or(lo - 1);
    let consistency = first_violation(lo, rec_hi, |n| {
        let (qn, qn1) = (q(n), q(n + 1));
        let lhs = a.eval_int(n) * &qn1 * &qn + b.eval_int(n) * &qn + c.eval_int(n);
        (!lhs.is_zero()).then(|| Verdict::fail(n, lhs, Rational::zero()))
    });
    let consistency =
        SubVerdict::new("a(n) q_(n+1) q_n + b(n) q_n + c(n) = 0", consistency).over(lo, rec_hi);

    let conclusion = first_violation(lo, rec_hi, |n| {
        let (qn, qn1) = (q(n), q(n + 1));
        let ok = match strictness {
            Strictness::Strict => qn < qn1,
            Strictness::Weak => qn <= qn1,
        };
        (!ok).then(|| Verdict::fail(n, qn, qn1))
    });
    let conclusion = SubVerdict::new(format!("conclusion: q_n {cmp} q_(n+1)"), conclusion).over(lo, rec_hi);

    Ok(CriterionReport::from_details(
        format!("theorem21({})", quotients.label()),
        (lo, n_hi),
        strictness,
        vec![cond_i, cond_ii, cond_iii, consistency, conclusion],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{sun_table, SequenceTable};
    use crate::sun;

    fn sun_quotients(upto: usize) -> QuotientTable {
        QuotientTable::from_sequence(&sun_table(upto)).unwrap()
    }

    #[test]
    fn sun_quotients_satisfy_all_conditions() {
        let q = sun_quotients(80);
        let (a, b, c) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
        let r = theorem21_check(&a, &b, &c, 0, &q, 79, Strictness::Strict).unwrap();
        assert!(r.verdict.is_pass(), "{r:#?}");
        assert_eq!(r.details.len(), 5);
    }

    #[test]
    fn fibonacci_fails_condition_three_at_two() {
        // F_(n+1) - F_n - F_(n-1) = 0: a = 1, b = c = -1; roots of x^2 - x - 1
        let fib = SequenceTable::from_i64("F", 0, &[1, 1, 2, 3, 5, 8, 13, 21]);
        let q = QuotientTable::from_sequence(&fib).unwrap();
        let one = Polynomial::from_ints(&[1]);
        let neg = Polynomial::from_ints(&[-1]);
        let r = theorem21_check(&one, &neg, &neg, 0, &q, 6, Strictness::Weak).unwrap();
        let iii = r.detail("(iii)").unwrap();
        assert_eq!(iii.verdict.witness(), Some(2));
        assert!(r.detail("(i)").unwrap().verdict.is_pass());
        assert!(r.verdict.is_fail());
    }

    #[test]
    fn nonpositive_leading_coefficient_fails_condition_one() {
        let q = sun_quotients(20);
        let neg_a = -sun::three_term_a();
        let r = theorem21_check(&neg_a, &sun::three_term_b(), &sun::three_term_c(), 0, &q, 19, Strictness::Strict)
            .unwrap();
        let i = r.detail("(i)").unwrap();
        assert!(i.verdict.is_fail());
        assert!(r.verdict.is_fail());
    }
}
