//! Sub-verdicts for statements about rational functions of `n`: exact
//! identities and eventual signs.

use super::{CheckError, SubVerdict, Verdict};
use crate::exact::{sign_for_all_n_geq, Rational, RationalFunction, Sign, Strictness};

/// How far past the start an identity failure is searched for a witness.
const IDENTITY_SCAN: i64 = 10_000;

fn has_sign(x: &Rational, sign: Sign, strictness: Strictness) -> bool {
    match (sign, strictness) {
        (Sign::Positive, Strictness::Strict) => x.is_positive(),
        (Sign::Positive, Strictness::Weak) => !x.is_negative(),
        (Sign::Negative, Strictness::Strict) => x.is_negative(),
        (Sign::Negative, Strictness::Weak) => !x.is_positive(),
    }
}

/// Certifies the sign of `f(n)` for every integer `n >= from`, through the
/// sign of numerator times denominator. A pole at or past `from` fails.
pub fn tail_sign_detail(
    condition: impl Into<String>,
    f: &RationalFunction,
    from: i64,
    sign: Sign,
    strictness: Strictness,
) -> Result<SubVerdict, CheckError> {
    let cert = sign_for_all_n_geq(&f.sign_polynomial(), from, strictness)?;
    let den_ok = sign_for_all_n_geq(&f.denominator().pow(2), from, Strictness::Strict)?
        .establishes(Sign::Positive, Strictness::Strict);
    let verdict = if den_ok && cert.establishes(sign, strictness) {
        Verdict::Pass
    } else {
        // Past the scan bound the sign is that of the leading coefficient,
        // so a wrong sign always shows up by then.
        let wrong = |n: i64| f.eval_int(n).is_none_or(|x| !has_sign(&x, sign, strictness));
        let w = (from..=cert.scan_bound.max(from)).find(|&n| wrong(n)).unwrap_or(from);
        Verdict::fail(w, f.eval_int(w).unwrap_or_else(Rational::zero), Rational::zero())
    };
    Ok(SubVerdict::new(condition, verdict).with_certificate(cert))
}

/// Exact equality of two rational functions. On failure the witness is the
/// smallest `n >= 0` at which they differ.
pub fn identity_detail(condition: impl Into<String>, lhs: &RationalFunction, rhs: &RationalFunction) -> SubVerdict {
    let verdict = if lhs == rhs {
        Verdict::Pass
    } else {
        let w = (0..IDENTITY_SCAN).find(|&n| lhs.eval_int(n) != rhs.eval_int(n)).unwrap_or(0);
        Verdict::fail(
            w,
            lhs.eval_int(w).unwrap_or_else(Rational::zero),
            rhs.eval_int(w).unwrap_or_else(Rational::zero),
        )
    };
    SubVerdict::new(condition, verdict)
}

/// Exact equality of two rationals, reported at index `at`.
pub fn value_detail(condition: impl Into<String>, at: i64, lhs: Rational, rhs: Rational) -> SubVerdict {
    let verdict = if lhs == rhs { Verdict::Pass } else { Verdict::fail(at, lhs, rhs) };
    SubVerdict::new(condition, verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;
    use crate::sun;

    #[test]
    fn eventual_signs() {
        let gap = sun::upper_step_gap_printed();
        assert!(tail_sign_detail("gap", &gap, 1, Sign::Negative, Strictness::Strict).unwrap().verdict.is_pass());
        let combo = RationalFunction::from_poly(sun::combination_printed());
        let at1 = tail_sign_detail("combo", &combo, 1, Sign::Positive, Strictness::Strict).unwrap();
        assert_eq!(at1.verdict.witness(), Some(1));
        assert!(tail_sign_detail("combo", &combo, 2, Sign::Positive, Strictness::Strict).unwrap().verdict.is_pass());
    }

    #[test]
    fn negative_leading_coefficient_gets_a_witness() {
        let f = RationalFunction::from_poly(Polynomial::from_ints(&[5, -1]));
        let d = tail_sign_detail("5 - n > 0", &f, 0, Sign::Positive, Strictness::Strict).unwrap();
        assert_eq!(d.verdict.witness(), Some(5));
    }

    #[test]
    fn weak_sign_rejects_poles() {
        // n / (n - 3) >= 0 from n = 4 but undefined at 3
        let f = RationalFunction::new(Polynomial::var(), Polynomial::from_ints(&[-3, 1])).unwrap();
        assert!(tail_sign_detail("pole", &f, 4, Sign::Positive, Strictness::Weak).unwrap().verdict.is_pass());
        assert_eq!(
            tail_sign_detail("pole", &f, 3, Sign::Positive, Strictness::Weak).unwrap().verdict.witness(),
            Some(3)
        );
    }

    #[test]
    fn identity_witness_is_first_difference() {
        let a = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        let b = RationalFunction::from_poly(Polynomial::from_ints(&[0, 1]));
        assert!(identity_detail("same", &a, &a.clone()).verdict.is_pass());
        assert_eq!(identity_detail("n^2 = n", &a, &b).verdict.witness(), Some(2));
    }
}
