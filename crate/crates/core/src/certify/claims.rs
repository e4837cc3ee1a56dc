//! One function per claim. Each returns the criterion reports it ran; a hard
//! error aborts only its own claim.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{claim_verdict, CertifyConfig, ClaimId, ClaimResult, Tables};
use crate::exact::{
    product, Polynomial, Quadratic, Rational, RationalFunction, Root, RootPosition, Sign, Strictness,
};
use crate::logbehavior::{
    cgw_ratio_check, check_log_concave_range, check_log_convex_range, identity_detail, interlacing_check,
    limit_diagnostics, nth_root_gap, nth_root_increasing_check, nth_root_logconcave_at, nth_root_logconcave_check,
    quadratic_rational_roots, tail_sign_detail, value_detail, BoundFunction, CheckError, CheckMode,
    CriterionReport, Direction, LimitConfig, SubVerdict, Verdict,
};
use crate::sequence::{QuotientTable, RecurrenceRelation, SequenceTable, Terms};
use crate::sun;

type Reports = Vec<CriterionReport>;

struct Ctx<'a> {
    config: &'a CertifyConfig,
    tables: Option<&'a Tables>,
}

impl Ctx<'_> {
    fn tables(&self) -> &Tables {
        self.tables.expect("tables are built for every claim that reads them")
    }

    fn s(&self) -> &SequenceTable {
        &self.tables().s
    }

    fn q(&self) -> Result<&QuotientTable, CheckError> {
        self.tables().q.as_ref().map_err(Clone::clone)
    }

    fn ratio_to(&self) -> i64 {
        self.config.ratio_to as i64
    }
}

pub(crate) fn run(id: ClaimId, config: &CertifyConfig, tables: Option<&Tables>) -> ClaimResult {
    let ctx = Ctx { config, tables };
    let outcome = match id {
        ClaimId::C1 => c1(&ctx),
        ClaimId::C2 => c2(&ctx),
        ClaimId::C3 => c3(&ctx),
        ClaimId::C4 => c4(&ctx),
        ClaimId::C5 => c5(&ctx),
        ClaimId::C6 => c6(&ctx),
        ClaimId::C7 => c7(&ctx),
        ClaimId::C8 => c8(&ctx),
        ClaimId::C9 => c9(&ctx),
        ClaimId::C10 => c10(&ctx),
        ClaimId::C11 => c11(),
        ClaimId::C12 => c12(),
    };
    let (reports, error) = match outcome {
        Ok(reports) => (reports, None),
        Err(e) => (Vec::new(), Some(e)),
    };
    ClaimResult {
        id,
        description: id.description().to_string(),
        statement: id.statement().to_string(),
        verdict: claim_verdict(&reports, error.as_ref()),
        error: error.map(|e| e.to_string()),
        reports,
    }
}

fn rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn ratio(num: Polynomial, den: Polynomial) -> Result<RationalFunction, CheckError> {
    Ok(RationalFunction::new(num, den)?)
}

fn strict_sign(
    condition: &str,
    f: &RationalFunction,
    from: i64,
    sign: Sign,
) -> Result<SubVerdict, CheckError> {
    tail_sign_detail(condition, f, from, sign, Strictness::Strict)
}

fn report(criterion: &str, range: (i64, i64), details: Vec<SubVerdict>) -> CriterionReport {
    CriterionReport::from_details(criterion, range, Strictness::Strict, details)
}

/// Residuals of `rec` at display indices `lo..=hi`; the witness is the
/// smallest display index with a nonzero residual.
fn residual_report<T: Terms + Sync + ?Sized>(
    rec: &RecurrenceRelation,
    table: &T,
    lo: i64,
    hi: i64,
) -> Result<CriterionReport, CheckError> {
    let base = |label: i64| {
        rec.base_index(label)
            .ok_or_else(|| CheckError::InvalidArgument(format!("{}: no base index for {label}", rec.name())))
    };
    base(lo)?;
    let residuals: Vec<(i64, Rational)> = (lo..=hi)
        .into_par_iter()
        .map(|label| Ok((label, rec.residual(table, base(label)?)?)))
        .collect::<Result<_, CheckError>>()?;
    let verdict = residuals
        .into_iter()
        .find(|(_, r)| !r.is_zero())
        .map(|(label, r)| Verdict::fail(label, r, Rational::zero()))
        .unwrap_or(Verdict::Pass);
    let detail = SubVerdict::new(format!("{} residual = 0", rec.name()), verdict).over(lo, hi);
    Ok(report(&format!("recurrence({})", rec.name()), (lo, hi), vec![detail]))
}

fn c1(ctx: &Ctx) -> Result<Reports, CheckError> {
    Ok(vec![residual_report(&sun::four_term_s(), ctx.s(), 0, ctx.ratio_to() - 3)?])
}

fn c2(ctx: &Ctx) -> Result<Reports, CheckError> {
    let f = ctx.tables().f.as_ref().expect("f table built for C2").as_ref().map_err(Clone::clone)?;
    let s = ctx.s();
    let hi = ctx.config.values_to as i64;
    let verdict = (0..=hi)
        .into_par_iter()
        .map(|n| {
            let k = n as usize;
            let lhs = BigInt::from(4 * n) * s.get(k).expect("covered");
            let prev = if k == 0 { BigInt::from(0) } else { f.get(k - 1).expect("covered").clone() };
            let rhs = BigInt::from((n + 1) * (n + 1)) * f.get(k).expect("covered") - BigInt::from(n * n) * prev;
            (lhs != rhs).then(|| Verdict::fail(n, Rational::from_integer(lhs), Rational::from_integer(rhs)))
        })
        .find_map_first(|v| v)
        .unwrap_or(Verdict::Pass);
    let details = vec![
        SubVerdict::new("f_n is an integer", Verdict::Pass)
            .over(0, hi)
            .with_note("every division in the sum for f_n was exact"),
        SubVerdict::new("4n S_n = (n+1)^2 f_n - n^2 f_(n-1)", verdict).over(0, hi),
    ];
    Ok(vec![report("identity(S, f)", (0, hi), details)])
}

fn c3(ctx: &Ctx) -> Result<Reports, CheckError> {
    let u = ctx.tables().u.as_ref().expect("u table built for C3");
    let r = ctx.ratio_to();
    let mut reports = vec![
        residual_report(&sun::u_order_three(), u, 1, r - 3)?,
        residual_report(&sun::v_order_three(), u, 1, r - 3)?,
        residual_report(&sun::u_order_two(), u, 1, r - 3)?,
        residual_report(&sun::three_term_s(), ctx.s(), 1, r - 1)?,
    ];

    // Second route: unroll the three-term recurrence from S_0 and S_1 alone.
    let s = ctx.s();
    let rec = sun::three_term_s();
    let initials = s.slice(0, 1)?;
    let route = match rec.extend(&initials, ctx.config.ratio_to) {
        Ok(unrolled) => {
            let direct = s.slice(0, ctx.config.ratio_to)?;
            match unrolled.first_mismatch(&direct) {
                None => SubVerdict::new("unrolled S_n equals the direct sum", Verdict::Pass),
                Some(n) => SubVerdict::new(
                    "unrolled S_n equals the direct sum",
                    Verdict::fail(
                        n,
                        Rational::from_integer(unrolled.get(n).cloned().unwrap_or_default()),
                        Rational::from_integer(direct.get(n).cloned().unwrap_or_default()),
                    ),
                ),
            }
        }
        Err(e) => {
            let at = e.index().unwrap_or(0);
            SubVerdict::new("unrolled S_n equals the direct sum", Verdict::fail(at, Rational::zero(), Rational::zero()))
                .with_note(e.to_string())
        }
    };
    reports.push(report("route equivalence(S)", (0, r), vec![route.over(0, r)]));
    Ok(reports)
}

fn h_bound() -> Result<BoundFunction, CheckError> {
    BoundFunction::new(sun::h(), 1)
}

fn c4(ctx: &Ctx) -> Result<Reports, CheckError> {
    let q = ctx.q()?;
    let r = ctx.ratio_to();
    let (a, b, c) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
    Ok(vec![
        check_log_convex_range(ctx.s(), Strictness::Strict, 1, ctx.config.values_to - 1)?,
        crate::logbehavior::theorem21_check(&a, &b, &c, 0, q, r, Strictness::Strict)?,
        interlacing_check(q, &h_bound()?, 1, r, Direction::Increasing, Strictness::Strict)?,
    ])
}

fn c5(ctx: &Ctx) -> Result<Reports, CheckError> {
    let q = ctx.q()?;
    let r = ctx.ratio_to();
    let h = sun::h();
    let (f, g) = (sun::ratio_f(), sun::ratio_g());
    let h_prev = h.compose_shift(-1);
    let h_next = h.compose_shift(1);
    let upper = &f - &g.checked_div(&h)?;
    let lower = &f - &g.checked_div(&h_prev)?;

    let s2 = q.get(2).cloned().unwrap_or_else(Rational::zero);
    let (h1, h2) = (Rational::new(9, 2), Rational::new(63, 8));
    let base = if h1 < s2 && s2 < h2 {
        Verdict::Pass
    } else if s2 <= h1 {
        Verdict::fail(2, h1.clone(), s2.clone())
    } else {
        Verdict::fail(2, s2.clone(), h2.clone())
    };

    let s3 = q.get(3).cloned().unwrap_or_default();
    let s3_check = if h2 < s3 { Verdict::Pass } else { Verdict::fail(3, h2.clone(), s3) };

    let details = vec![
        value_detail("s_2 = 55/7", 2, s2.clone(), Rational::new(55, 7)),
        value_detail("h(1) = 9/2", 1, h.eval_int(1).unwrap_or_default(), h1),
        value_detail("h(2) = 63/8", 2, h.eval_int(2).unwrap_or_default(), h2),
        SubVerdict::new("base case: h(1) < s_2 < h(2)", base).over(2, 2),
        identity_detail("F(n) - G(n)/h(n) equals its closed form", &upper, &sun::upper_step_printed()),
        identity_detail(
            "F(n) - G(n)/h(n) - h(n+1) equals its closed form",
            &(&sun::upper_step_printed() - &h_next),
            &sun::upper_step_gap_printed(),
        ),
        strict_sign("F(n) - G(n)/h(n) - h(n+1) < 0 for n >= 1", &sun::upper_step_gap_printed(), 1, Sign::Negative)?,
        identity_detail("F(n) - G(n)/h(n-1) equals its closed form", &lower, &sun::lower_step_printed()),
        identity_detail(
            "F(n) - G(n)/h(n-1) - h(n) equals its closed form",
            &(&sun::lower_step_printed() - &h),
            &sun::lower_step_gap_printed(),
        ),
        strict_sign("F(n) - G(n)/h(n-1) - h(n) > 0 for n >= 3", &sun::lower_step_gap_printed(), 3, Sign::Positive)?,
        strict_sign("F(n) - G(n)/h(n-1) - h(n) > 0 for n >= 1", &sun::lower_step_gap_printed(), 1, Sign::Positive)?
            .informational()
            .with_note("negative at n = 2, so the lower step from n = 2 is replaced by the direct check of s_3"),
        SubVerdict::new("second base case: h(2) < s_3", s3_check).over(3, 3),
        strict_sign("G(n) > 0 for n >= 1", &g, 1, Sign::Positive)?,
        strict_sign("h(n+1) - h(n) > 0 for n >= 1", &(&h_next - &h), 1, Sign::Positive)?,
        strict_sign("9 - h(n) > 0 for n >= 1", &(&RationalFunction::constant(Rational::from(9)) - &h), 1, Sign::Positive)?,
    ];
    Ok(vec![
        report("induction(h)", (2, i64::MAX), details),
        interlacing_check(q, &h_bound()?, 1, r, Direction::Increasing, Strictness::Strict)?,
    ])
}

fn quadratic_at(n: i64) -> Result<Quadratic, CheckError> {
    Ok(Quadratic::at(&sun::three_term_a(), &sun::three_term_b(), &sun::three_term_c(), n)?)
}

fn root_width() -> Rational {
    Rational::new(1, 1_000_000_000_000i64)
}

fn per_n<F>(lo: i64, hi: i64, test: F) -> Verdict
where
    F: Fn(i64) -> Option<Verdict> + Sync,
{
    (lo..=hi).into_par_iter().find_map_first(&test).unwrap_or(Verdict::Pass)
}

/// `d.ddddd` as an exact rational.
fn five_places(text: &str) -> Rational {
    let digits: String = text.chars().filter(|c| *c != '.').collect();
    Rational::new(digits.parse::<i64>().unwrap_or(0), 100_000)
}

fn c6(ctx: &Ctx) -> Result<Reports, CheckError> {
    let q = ctx.q()?;
    let r = ctx.ratio_to();
    let quads: Vec<Quadratic> = (1..=r).map(quadratic_at).collect::<Result<_, _>>()?;
    let quad = |n: i64| &quads[(n - 1) as usize];
    let s = |n: i64| q.get(n as usize).expect("covered");

    let membership = per_n(1, r, |n| {
        let s_n = s(n);
        (quad(n).position(s_n) != RootPosition::Between).then(|| Verdict::fail(n, quad(n).eval(s_n), Rational::zero()))
    });

    let (x_lo, x_hi) = quad(1).enclose_root(Root::Lower, &root_width());
    let (y_lo, y_hi) = quad(1).enclose_root(Root::Upper, &root_width());
    let decimal_check = |lo: &Rational, hi: &Rational, expected: &str| {
        let (a, b) = (lo.to_decimal(5), hi.to_decimal(5));
        if a == expected && b == expected {
            Verdict::Pass
        } else {
            Verdict::fail(1, lo.clone(), five_places(expected))
        }
    };
    let x_note = format!("X(1) in [{}, {}]", x_lo.to_decimal(12), x_hi.to_decimal(12));
    let y_note = format!("Y(1) in [{}, {}]", y_lo.to_decimal(12), y_hi.to_decimal(12));

    let vertex = sun::l_vertex();
    let below_vertex = per_n(1, r, |n| {
        let v = vertex.eval_int(n).unwrap_or_default();
        (v >= *s(n)).then(|| Verdict::fail(n, v, s(n).clone()))
    });

    let printed_l = sun::l_printed();
    let l_above_x = per_n(1, r, |n| {
        let l = printed_l.eval_int(n).unwrap_or_default();
        matches!(quad(n).position(&l), RootPosition::BelowLower | RootPosition::OnLower).then(|| {
            let (_, x_hi) = quad(n).enclose_root(Root::Lower, &root_width());
            Verdict::fail(n, l, x_hi)
        })
    });
    let s_above_l = per_n(1, r, |n| {
        let l = printed_l.eval_int(n).unwrap_or_default();
        (*s(n) <= l).then(|| Verdict::fail(n, s(n).clone(), l))
    });

    let details = vec![
        SubVerdict::new("X(n) < s_n < Y(n)", membership).over(1, r),
        SubVerdict::new("X(1) = 1.03059 to five places", decimal_check(&x_lo, &x_hi, "1.03059")).with_note(x_note),
        SubVerdict::new("Y(1) = 8.00512 to five places", decimal_check(&y_lo, &y_hi, "8.00512")).with_note(y_note),
        value_detail("Delta(1) = 343233 = 9 * 38137", 1, quad(1).discriminant(), Rational::from(9 * 38137)),
        value_detail("-b(1) = 759", 1, -sun::three_term_b().eval_int(1), Rational::from(759)),
        value_detail("2 a(1) = 168", 1, Rational::from(2) * sun::three_term_a().eval_int(1), Rational::from(168)),
        strict_sign("Delta(n) > 0 for n >= 1, so X(n) < V(n)", &rf(sun::delta()), 1, Sign::Positive)?,
        SubVerdict::new("V(n) = -b(n)/(2a(n)) < s_n", below_vertex).over(1, r),
        SubVerdict::new("printed lower end L(n) > X(n)", l_above_x)
            .over(1, r)
            .informational()
            .with_note("L(n) is not a lower bound for X(n) on this range; V(n) replaces it"),
        SubVerdict::new("s_n > L(n)", s_above_l).over(1, r).informational(),
    ];
    Ok(vec![report("root interval(S/S)", (1, r), details)])
}

fn c7(ctx: &Ctx) -> Result<Reports, CheckError> {
    let q = ctx.q()?;
    let r = ctx.ratio_to();
    let (u, v, h) = (sun::cgw_u(), sun::cgw_v(), sun::h());
    let three_quarters_u = u.scale(&Rational::new(3, 4));
    let lower_gap = &three_quarters_u - &h.compose_shift(-1);
    let details = vec![
        identity_detail("3u(n)/4 - h(n-1) equals its closed form", &lower_gap, &sun::cgw_lower_gap_printed()),
        strict_sign("3u(n)/4 - h(n-1) < 0 for n >= 3", &lower_gap, 3, Sign::Negative)?,
        identity_detail("u(n) equals its closed form", &u, &sun::cgw_u_printed()),
        identity_detail("v(n) equals minus the printed magnitude", &v, &-sun::cgw_v_printed_magnitude()),
        strict_sign("printed v(n) magnitude, read as v(n), is negative", &sun::cgw_v_printed_magnitude(), 2, Sign::Negative)?
            .informational()
            .with_note("the magnitude is positive; the recurrence fixes v(n) < 0"),
    ];
    Ok(vec![
        cgw_ratio_check(&u, &v, &h_bound()?, 1, q, r, Strictness::Strict)?,
        check_log_concave_range(q, Strictness::Strict, 2, ctx.config.ratio_to - 1)?,
        report("ratio bounds(u, v)", (3, i64::MAX), details),
    ])
}

fn c8(ctx: &Ctx) -> Result<Reports, CheckError> {
    Ok(vec![nth_root_increasing_check(ctx.s(), 1, ctx.config.nth_root_increasing_to)?])
}

fn c9(ctx: &Ctx) -> Result<Reports, CheckError> {
    let cfg = ctx.config;
    let s = ctx.s();
    let mut reports = vec![nth_root_logconcave_check(s, 2, cfg.root_exact_to, CheckMode::Exact, cfg.precision)?];
    if cfg.root_to > cfg.root_exact_to {
        reports.push(nth_root_logconcave_check(
            s,
            cfg.root_exact_to + 1,
            cfg.root_to,
            CheckMode::Interval,
            cfg.precision,
        )?);
    }

    let pairs: Vec<(usize, Verdict, Verdict)> = (2..=cfg.root_exact_to)
        .into_par_iter()
        .map(|n| {
            let exact = nth_root_logconcave_at(s, n, CheckMode::Exact, cfg.precision)?;
            let interval = nth_root_logconcave_at(s, n, CheckMode::Interval, cfg.precision)?;
            Ok((n, exact.verdict, interval.verdict))
        })
        .collect::<Result<_, CheckError>>()?;
    let indicator = |v: &Verdict| Rational::from(v.is_pass() as i64);
    let agreement = pairs
        .iter()
        .find(|(_, e, i)| e.is_pass() != i.is_pass() || e.is_fail() != i.is_fail())
        .map(|(n, e, i)| {
            if i.is_indeterminate() {
                Verdict::Indeterminate { witness: *n as i64, reason: "interval mode could not decide".into() }
            } else {
                Verdict::fail(*n, indicator(e), indicator(i))
            }
        })
        .unwrap_or(Verdict::Pass);

    let details = vec![
        value_detail("gap at n = 2", 2, nth_root_gap(s, 2)?, Rational::new(89679424, 782954095)),
        SubVerdict::new("exact and interval verdicts agree", agreement)
            .over(2, cfg.root_exact_to)
            .with_note("on disagreement lhs and rhs are 1 for pass and 0 otherwise, exact first"),
    ];
    reports.push(report("nth-root cross-check(S)", (2, cfg.root_exact_to as i64), details));
    Ok(reports)
}

fn c10(ctx: &Ctx) -> Result<Reports, CheckError> {
    let q = ctx.q()?;
    let r = ctx.ratio_to();
    let config = LimitConfig {
        threshold: ctx.config.limit_threshold.clone(),
        precision: ctx.config.precision,
        exact_to: ctx.config.root_exact_to,
    };
    let diagnostics = limit_diagnostics(q, ctx.s(), ctx.config.ratio_to, &config)?;
    let s = |n: i64| q.get(n as usize).expect("covered");
    let increasing_from = |lo: i64| {
        per_n(lo, r - 2, |n| {
            let (a, b) = (s(n + 1), s(n + 2));
            (a >= b).then(|| Verdict::fail(n, a.clone(), b.clone()))
        })
    };
    let details = vec![
        SubVerdict::new("s_(n+1) < s_(n+2) for n >= 3", increasing_from(3)).over(3, r - 2),
        SubVerdict::new("s_(n+1) < s_(n+2) for n >= 0", increasing_from(0)).over(0, r - 2),
    ];
    Ok(vec![diagnostics, report("ratio monotonicity(S/S)", (0, r - 2), details)])
}

fn poly_identity(condition: &str, lhs: &Polynomial, rhs: &Polynomial) -> SubVerdict {
    identity_detail(condition, &rf(lhs.clone()), &rf(rhs.clone()))
}

/// The bound step through `Y(n)`: coefficients of `1` and `sqrt(Delta(n))`.
fn upper_step_through_root() -> Result<(RationalFunction, RationalFunction), CheckError> {
    let (b, c) = (sun::three_term_b(), sun::three_term_c());
    let (f, g) = (sun::ratio_f(), sun::ratio_g());
    // 1/Y = -(b + sqrt(Delta)) / (2c), so F - G/Y = F + G b/(2c) + G/(2c) sqrt(Delta).
    let two_c = rf(&Polynomial::constant(Rational::from(2)) * &c);
    let g_over_2c = g.checked_div(&two_c)?;
    Ok((&f + &(&g_over_2c * &rf(b)), g_over_2c))
}

fn upper_step_through_root_printed() -> Result<(RationalFunction, RationalFunction), CheckError> {
    let l = |k: i64, c: i64| Polynomial::from_ints(&[c, k]);
    let den = product(&[
        Polynomial::from_ints(&[2]),
        l(1, 1),
        l(1, 1),
        l(4, -1),
        l(4, 3),
        l(4, 7),
    ]);
    let rational = product(&[l(4, 7), l(4, 7), l(4, -1), Polynomial::from_ints(&[3, 10, 10])]);
    Ok((ratio(rational, den.clone())?, ratio(l(4, 7), den)?))
}

fn c11() -> Result<Reports, CheckError> {
    let (a, b) = (sun::three_term_a(), sun::three_term_b());
    let delta = sun::delta();
    let delta_next = delta.shift(1);
    let two = Polynomial::from_ints(&[2]);

    let mut details = vec![
        poly_identity("b^2 - 4ac equals the printed B(n)", &delta, &sun::delta_printed()),
        poly_identity("printed factorization of B(n)", &sun::a_squared_printed(), &sun::delta_printed()),
        poly_identity("Delta(n+1) equals the printed C(n)", &delta_next, &sun::c_poly_printed()),
        tail_sign_detail("Delta(n) >= 0 for n >= 0", &rf(delta.clone()), 0, Sign::Positive, Strictness::Weak)?,
        poly_identity(
            "square comparison for B(n) matches its closed form",
            &(&sun::sq_b_root().pow(2) - &delta),
            &sun::sq_b_gap_printed(),
        ),
        strict_sign("sq_B(n)^2 - B(n) > 0 for n >= 1", &rf(sun::sq_b_gap_printed()), 1, Sign::Positive)?,
        poly_identity(
            "square comparison for C(n) matches its closed form",
            &(&sun::sq_c_root().pow(2) - &delta_next),
            &sun::sq_c_gap_printed(),
        ),
        strict_sign("sq_C(n)^2 - C(n) < 0 for n >= 1", &rf(sun::sq_c_gap_printed()), 1, Sign::Negative)?,
        strict_sign("sq_B(n) > 0 for n >= 1", &rf(sun::sq_b_root()), 1, Sign::Positive)?,
        strict_sign("sq_C(n) > 0 for n >= 1", &rf(sun::sq_c_root()), 1, Sign::Positive)?,
    ];

    let (step_rational, step_root) = upper_step_through_root()?;
    let (printed_rational, printed_root) = upper_step_through_root_printed()?;
    details.push(identity_detail("F(n) - G(n)/Y(n): rational part matches", &step_rational, &printed_rational));
    details.push(identity_detail("F(n) - G(n)/Y(n): sqrt(B(n)) part matches", &step_root, &printed_root));

    // delta_n = Y(n+1) - (F(n) - G(n)/Y(n)) in the basis {1, sqrt(B), sqrt(C)}.
    let den = sun::delta_step_denominator();
    let two_a_next = &two * &a.shift(1);
    let y_next_rational = ratio(-b.shift(1), two_a_next.clone())?;
    let y_next_root = ratio(Polynomial::one(), two_a_next)?;
    details.push(identity_detail(
        "delta_n: coefficient of 1",
        &(&y_next_rational - &printed_rational),
        &ratio(sun::delta_step_rational_part(), den.clone())?,
    ));
    details.push(identity_detail(
        "delta_n: coefficient of sqrt(B(n))",
        &-printed_root,
        &ratio(-sun::delta_step_b_weight(), den.clone())?,
    ));
    details.push(identity_detail(
        "delta_n: coefficient of sqrt(C(n))",
        &y_next_root,
        &ratio(sun::delta_step_c_weight(), den.clone())?,
    ));
    details.push(strict_sign("delta_n denominator > 0 for n >= 1", &rf(den), 1, Sign::Positive)?);
    details.push(strict_sign("weight of sqrt(B(n)) > 0 for n >= 1", &rf(sun::delta_step_b_weight()), 1, Sign::Positive)?);
    details.push(strict_sign("weight of sqrt(C(n)) > 0 for n >= 1", &rf(sun::delta_step_c_weight()), 1, Sign::Positive)?);
    details.push(poly_identity("combination equals its closed form", &sun::combination(), &sun::combination_printed()));
    details.push(strict_sign("combination > 0 for n >= 2", &rf(sun::combination_printed()), 2, Sign::Positive)?);
    details.push(
        strict_sign("combination > 0 at n = 1", &rf(sun::combination_printed()), 1, Sign::Positive)?
            .informational()
            .with_note("the lower estimate for delta_n starts at n = 2"),
    );

    details.push(identity_detail("F(n) equals its closed form", &sun::ratio_f(), &sun::ratio_f_printed()));
    details.push(identity_detail("G(n) equals its closed form", &sun::ratio_g(), &sun::ratio_g_printed()));

    let (u, v, h) = (sun::cgw_u(), sun::cgw_v(), sun::h());
    let quartic = sun::cgw_condition_two(&u, &v, &h);
    let quartic_printed = ratio(-sun::d_printed(), sun::cgw_denominator_printed())?;
    details.push(identity_detail("ratio quartic equals -D(n) / (16 n^8 (n+1)^2 (4n-5)(4n-1))", &quartic, &quartic_printed));
    details.push(strict_sign("ratio quartic < 0 for n >= 1", &quartic_printed, 1, Sign::Negative)?);
    details.push(identity_detail("u(n) equals its closed form", &u, &sun::cgw_u_printed()));
    details.push(identity_detail("v(n) equals minus the printed magnitude", &v, &-sun::cgw_v_printed_magnitude()));

    Ok(vec![report("symbolic identities", (0, i64::MAX), details)])
}

fn c12() -> Result<Reports, CheckError> {
    let printed = sun::limit_quadratic_printed();
    let derived = sun::limit_quadratic_derived();
    let same = match &derived {
        Some(d) if *d == printed => Verdict::Pass,
        _ => Verdict::fail(0, Rational::zero(), Rational::one()),
    };
    let roots = quadratic_rational_roots(&printed);
    let roots_verdict = match &roots {
        Some((x, y)) if x.is_one() && *y == Rational::from(9) => Verdict::Pass,
        Some((x, _)) => Verdict::fail(0, x.clone(), Rational::one()),
        None => Verdict::fail(0, Rational::zero(), Rational::one()),
    };
    let note = match &roots {
        Some((x, y)) => format!("roots {x} and {y}"),
        None => "roots are not rational".to_string(),
    };
    let details = vec![
        SubVerdict::new("limit quadratic from F and G equals s^2 - 10s + 9", same),
        SubVerdict::new("roots of s^2 - 10s + 9 are exactly {1, 9}", roots_verdict).with_note(note),
    ];
    Ok(vec![report("limit quadratic", (0, 0), details)])
}
