//! Quotients squeezed between consecutive values of a monotone bound:
//! `b(n-1) <= q_n <= b(n)` for an increasing bound (reversed when
//! decreasing) forces `q_n` to be monotone in the same direction.

use serde::{Deserialize, Serialize};

use super::{first_violation, require_covered, BoundFunction, CheckError, CriterionReport, SubVerdict, Verdict};
use crate::exact::{Rational, Strictness};
use crate::sequence::{QuotientTable, Terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

fn ordered(x: &Rational, y: &Rational, strictness: Strictness) -> bool {
    match strictness {
        Strictness::Strict => x < y,
        Strictness::Weak => x <= y,
    }
}

/// Checks the interlacing for `N < n <= n_hi`, the monotonicity of the
/// bound on `N..=n_hi`, and re-verifies the monotonicity of `q_n`.
pub fn interlacing_check(
    quotients: &QuotientTable,
    bound: &BoundFunction,
    big_n: i64,
    n_hi: i64,
    direction: Direction,
    strictness: Strictness,
) -> Result<CriterionReport, CheckError> {
    let lo = big_n + 1;
    if lo < 1 || n_hi < lo {
        return Err(CheckError::InvalidArgument(format!("empty or invalid range {lo}..={n_hi}")));
    }
    if bound.valid_from > big_n {
        return Err(CheckError::BoundUndefined { index: big_n });
    }
    require_covered(quotients, lo as usize, n_hi as usize)?;
    let values: Vec<Rational> = (big_n..=n_hi).map(|n| bound.eval(n)).collect::<Result<_, _>>()?;
    let b = |n: i64| &values[(n - big_n) as usize];
    let q = |n: i64| quotients.term(n as usize).unwrap();
    // In the decreasing case every comparison is mirrored.
    let le = |x: &Rational, y: &Rational| match direction {
        Direction::Increasing => ordered(x, y, strictness),
        Direction::Decreasing => ordered(y, x, strictness),
    };
    let cmp = match (direction, strictness) {
        (Direction::Increasing, Strictness::Strict) => "<",
        (Direction::Increasing, Strictness::Weak) => "<=",
        (Direction::Decreasing, Strictness::Strict) => ">",
        (Direction::Decreasing, Strictness::Weak) => ">=",
    };

    let monotone = first_violation(big_n, n_hi - 1, |n| (!le(b(n), b(n + 1))).then(|| Verdict::fail(n, b(n).clone(), b(n + 1).clone())));
    let lower = first_violation(lo, n_hi, |n| {
        let qn = q(n);
        (!le(b(n - 1), &qn)).then(|| Verdict::fail(n, b(n - 1).clone(), qn))
    });
    let upper = first_violation(lo, n_hi, |n| {
        let qn = q(n);
        (!le(&qn, b(n))).then(|| Verdict::fail(n, qn, b(n).clone()))
    });
    let conclusion = first_violation(lo, n_hi - 1, |n| {
        let (qn, qn1) = (q(n), q(n + 1));
        (!le(&qn, &qn1)).then(|| Verdict::fail(n, qn, qn1))
    });

    let details = vec![
        SubVerdict::new(format!("bound: b(n) {cmp} b(n+1)"), monotone).over(big_n, n_hi - 1),
        SubVerdict::new(format!("lower: b(n-1) {cmp} q_n"), lower).over(lo, n_hi),
        SubVerdict::new(format!("upper: q_n {cmp} b(n)"), upper).over(lo, n_hi),
        SubVerdict::new(format!("conclusion: q_n {cmp} q_(n+1)"), conclusion).over(lo, n_hi - 1),
    ];
    Ok(CriterionReport::from_details(
        format!("interlacing({})", quotients.label()),
        (lo, n_hi),
        strictness,
        details,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Polynomial, RationalFunction};
    use crate::sequence::sun_table;
    use crate::sun;

    #[test]
    fn sun_quotients_interlace_with_h() {
        let q = QuotientTable::from_sequence(&sun_table(201)).unwrap();
        let h = BoundFunction::new(sun::h(), 1).unwrap();
        let r = interlacing_check(&q, &h, 1, 200, Direction::Increasing, Strictness::Strict).unwrap();
        assert!(r.verdict.is_pass(), "{r:#?}");
    }

    #[test]
    fn reciprocal_factorial_quotients_decrease() {
        // q_n = 1/n for z_n = 1/n!, bound b(n) = 1/(n+1)
        let qs = (1..=20).map(|n| Rational::new(1, n)).collect();
        let q = QuotientTable::from_rationals("1/n!", 1, qs);
        let b = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[1, 1])).unwrap();
        let b = BoundFunction::new(b, 0).unwrap();
        let weak = interlacing_check(&q, &b, 0, 20, Direction::Decreasing, Strictness::Weak).unwrap();
        assert!(weak.verdict.is_pass(), "{weak:#?}");
        // b(n-1) = q_n exactly, so the strict lower comparison fails at once
        let strict = interlacing_check(&q, &b, 0, 20, Direction::Decreasing, Strictness::Strict).unwrap();
        assert_eq!(strict.detail("lower").unwrap().verdict.witness(), Some(1));
    }

    #[test]
    fn bound_must_be_defined_at_n() {
        let q = QuotientTable::from_sequence(&sun_table(10)).unwrap();
        let h = BoundFunction::new(sun::h(), 1).unwrap();
        assert_eq!(
            interlacing_check(&q, &h, 0, 9, Direction::Increasing, Strictness::Strict).unwrap_err(),
            CheckError::BoundUndefined { index: 0 }
        );
    }
}
