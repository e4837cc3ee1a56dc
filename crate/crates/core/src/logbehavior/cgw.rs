//! Ratio log-concavity for `z_n = u(n) z_{n-1} + v(n) z_{n-2}` with `v(n) < 0`:
//! it suffices that `3u(n)/4 <= z_n / z_{n-1} <= h(n)` and
//! `h(n)^4 - u(n) h(n)^3 - u(n+1) v(n) h(n) - v(n) v(n+1) < 0` for `n >= N + 2`.

use super::{
    first_violation, require_covered, tail_sign_detail, BoundFunction, CheckError, CriterionReport, SubVerdict, Verdict,
};
use crate::exact::{Rational, RationalFunction, Sign, Strictness};
use crate::sequence::{QuotientTable, Terms};
use crate::sun::cgw_condition_two;

fn eval(f: &RationalFunction, n: i64) -> Result<Rational, CheckError> {
    f.eval_int(n).ok_or(CheckError::BoundUndefined { index: n })
}

/// Checks both conditions on `N + 2 <= n <= n_hi`. Condition (ii) is
/// checked per `n` and, symbolically, for every `n >= N + 2`.
pub fn cgw_ratio_check(
    u: &RationalFunction,
    v: &RationalFunction,
    h: &BoundFunction,
    big_n: i64,
    quotients: &QuotientTable,
    n_hi: i64,
    strictness: Strictness,
) -> Result<CriterionReport, CheckError> {
    let lo = big_n + 2;
    if big_n < 0 || n_hi < lo {
        return Err(CheckError::InvalidArgument(format!("empty or invalid range {lo}..={n_hi}")));
    }
    if h.valid_from > lo {
        return Err(CheckError::BoundUndefined { index: lo });
    }
    require_covered(quotients, lo as usize, n_hi as usize)?;
    let us: Vec<Rational> = (lo..=n_hi + 1).map(|n| eval(u, n)).collect::<Result<_, _>>()?;
    let vs: Vec<Rational> = (lo..=n_hi + 1).map(|n| eval(v, n)).collect::<Result<_, _>>()?;
    let hs: Vec<Rational> = (lo..=n_hi).map(|n| h.eval(n)).collect::<Result<_, _>>()?;
    let at = |xs: &[Rational], n: i64| xs[(n - lo) as usize].clone();
    let q = |n: i64| quotients.term(n as usize).unwrap();
    let le = |x: &Rational, y: &Rational| match strictness {
        Strictness::Strict => x < y,
        Strictness::Weak => x <= y,
    };
    let cmp = if strictness == Strictness::Strict { "<" } else { "<=" };

    let v_range = first_violation(lo, n_hi + 1, |n| {
        let vn = at(&vs, n);
        (!vn.is_negative()).then(|| Verdict::fail(n, vn, Rational::zero()))
    });
    let v_range = SubVerdict::new("v(n) < 0", v_range)
        .over(lo, n_hi + 1)
        .with_note("sign convention: the recurrence must be normalized to z_n = u(n) z_(n-1) + v(n) z_(n-2) with v(n) < 0");
    let v_tail = tail_sign_detail("v(n) < 0 for all n >= 2", v, 2, Sign::Negative, Strictness::Strict)?;

    let lower = first_violation(lo, n_hi, |n| {
        let (bound, qn) = (at(&us, n) * Rational::new(3, 4), q(n));
        (!le(&bound, &qn)).then(|| Verdict::fail(n, bound, qn))
    });
    let upper = first_violation(lo, n_hi, |n| {
        let (qn, hn) = (q(n), at(&hs, n));
        (!le(&qn, &hn)).then(|| Verdict::fail(n, qn, hn))
    });

    let quartic = |n: i64| {
        let (hn, un, un1, vn, vn1) = (at(&hs, n), at(&us, n), at(&us, n + 1), at(&vs, n), at(&vs, n + 1));
        hn.pow(4) - &un * hn.pow(3) - un1 * &vn * &hn - vn * vn1
    };
    let per_n: Vec<Rational> = (lo..=n_hi).map(quartic).collect();
    let ii_per_n = first_violation(lo, n_hi, |n| {
        let e = &per_n[(n - lo) as usize];
        (!e.is_negative()).then(|| Verdict::fail(n, e.clone(), Rational::zero()))
    });

    let symbolic = cgw_condition_two(u, v, &h.expr);
    let ii_symbolic = tail_sign_detail(
        "(ii) symbolic: quartic < 0 for all n >= N+2",
        &symbolic,
        lo,
        Sign::Negative,
        Strictness::Strict,
    )?;
    let consistency = first_violation(lo, n_hi, |n| {
        let e = &per_n[(n - lo) as usize];
        let s = symbolic.eval_int(n).unwrap_or_else(Rational::zero);
        (*e != s).then(|| Verdict::fail(n, e.clone(), s))
    });

    let details = vec![
        v_range,
        v_tail,
        SubVerdict::new(format!("(i) lower: 3u(n)/4 {cmp} q_n"), lower).over(lo, n_hi),
        SubVerdict::new(format!("(i) upper: q_n {cmp} h(n)"), upper).over(lo, n_hi),
        SubVerdict::new("(ii) per-n: h^4 - u h^3 - u(n+1) v h - v v(n+1) < 0", ii_per_n).over(lo, n_hi),
        ii_symbolic,
        SubVerdict::new("(ii) per-n value equals symbolic form", consistency).over(lo, n_hi),
    ];
    Ok(CriterionReport::from_details(
        format!("cgw({})", quotients.label()),
        (lo, n_hi),
        strictness,
        details,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::sun_table;
    use crate::sun;

    fn setup(upto: usize) -> (QuotientTable, BoundFunction) {
        (QuotientTable::from_sequence(&sun_table(upto)).unwrap(), BoundFunction::new(sun::h(), 1).unwrap())
    }

    #[test]
    fn sun_numbers_are_ratio_log_concave() {
        let (q, h) = setup(120);
        let r = cgw_ratio_check(&sun::cgw_u(), &sun::cgw_v(), &h, 1, &q, 119, Strictness::Strict).unwrap();
        assert!(r.verdict.is_pass(), "{r:#?}");
        assert_eq!(r.range, (3, 119));
    }

    #[test]
    fn positive_v_violates_sign_convention() {
        let (q, h) = setup(20);
        let r = cgw_ratio_check(&sun::cgw_u(), &sun::cgw_v_printed_magnitude(), &h, 1, &q, 19, Strictness::Weak)
            .unwrap();
        let v = r.detail("v(n) < 0").unwrap();
        assert_eq!(v.verdict.witness(), Some(3));
        assert!(v.note.as_deref().unwrap().contains("sign convention"));
        assert!(r.verdict.is_fail());
    }

    #[test]
    fn range_starts_two_past_n() {
        let (q, h) = setup(20);
        let r = cgw_ratio_check(&sun::cgw_u(), &sun::cgw_v(), &h, 0, &q, 19, Strictness::Strict).unwrap();
        assert_eq!(r.range.0, 2);
        assert!(r.detail("(i) lower").unwrap().verdict.is_pass());
    }
}
