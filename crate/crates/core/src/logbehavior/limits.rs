//! Finite-range evidence for the limits `s_n -> 9` and `r_n -> 1`, where
//! `r_n = z_{n+1}^{1/(n+1)} / z_n^{1/n}`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::roots::root_ratio_log;
use super::{
    first_violation, nth_root_increasing_check, nth_root_logconcave_check, require_covered, CheckError, CheckMode,
    CriterionReport, PrecisionPolicy, SubVerdict, Verdict,
};
use crate::exact::{Polynomial, Rational, Strictness};
use crate::sequence::{QuotientTable, SequenceTable, Terms};
use crate::sun;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitConfig {
    /// Required upper bound on `r_{n_hi} - 1`.
    pub threshold: Rational,
    pub precision: PrecisionPolicy,
    /// Largest `n` whose log-concavity comparison runs on exact powers.
    pub exact_to: usize,
}

impl Default for LimitConfig {
    fn default() -> Self {
        LimitConfig { threshold: Rational::new(1, 100), precision: PrecisionPolicy::default(), exact_to: 60 }
    }
}

fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// Both roots of a quadratic, ascending, when they are rational.
pub fn quadratic_rational_roots(p: &Polynomial) -> Option<(Rational, Rational)> {
    if p.degree() != Some(2) {
        return None;
    }
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let disc = &b * &b - Rational::from(4) * &a * &c;
    let root = Rational::new(exact_sqrt(disc.numer())?, exact_sqrt(disc.denom())?);
    let two_a = Rational::from(2) * &a;
    let (x, y) = ((-&b - &root) / &two_a, (-&b + &root) / &two_a);
    Some(if x <= y { (x, y) } else { (y, x) })
}

fn nested(report: CriterionReport, condition: &str) -> SubVerdict {
    let (lo, hi) = report.range;
    let note = report.details.iter().filter_map(|d| d.note.clone()).collect::<Vec<_>>().join("; ");
    let sub = SubVerdict::new(condition, report.verdict).over(lo, hi);
    if note.is_empty() {
        sub
    } else {
        sub.with_note(note)
    }
}

/// Runs the squeeze, limit-quadratic and root-ratio diagnostics up to `n_hi`.
/// `values` must cover `0..=n_hi+1` and `quotients` `1..=n_hi`.
pub fn limit_diagnostics(
    quotients: &QuotientTable,
    values: &SequenceTable,
    n_hi: usize,
    config: &LimitConfig,
) -> Result<CriterionReport, CheckError> {
    if n_hi < 2 {
        return Err(CheckError::InvalidArgument("limit diagnostics need n_hi >= 2".into()));
    }
    require_covered(quotients, 1, n_hi)?;
    require_covered(values, 0, n_hi + 1)?;
    let nine = Rational::from(9);
    let s = |n: i64| quotients.term(n as usize).unwrap();
    let hi = n_hi as i64;
    let mut details = Vec::new();

    let squeeze = first_violation(2, hi, |n| {
        let gap = &nine - s(n);
        let below = Rational::new(9, 2 * n * n);
        let above = Rational::new(9, 2 * (n - 1) * (n - 1));
        if gap <= below {
            Some(Verdict::fail(n, below, gap))
        } else if gap >= above {
            Some(Verdict::fail(n, gap, above))
        } else {
            None
        }
    });
    details.push(SubVerdict::new("squeeze: 9/(2n^2) < 9 - s_n < 9/(2(n-1)^2)", squeeze).over(2, hi));

    let increasing = first_violation(1, hi - 1, |n| {
        let (a, b) = (s(n), s(n + 1));
        (a >= b).then(|| Verdict::fail(n, a, b))
    });
    details.push(SubVerdict::new("s_n < s_(n+1)", increasing).over(1, hi - 1));
    let below_nine = first_violation(1, hi, |n| {
        let a = s(n);
        (a >= nine).then(|| Verdict::fail(n, a, nine.clone()))
    });
    details.push(SubVerdict::new("s_n < 9", below_nine).over(1, hi));

    let derived = sun::limit_quadratic_derived();
    let quad = match &derived {
        Some(q) if *q == sun::limit_quadratic_printed() => Verdict::Pass,
        _ => Verdict::fail(0, Rational::zero(), Rational::one()),
    };
    details.push(
        SubVerdict::new("limit quadratic from the ratio recurrence equals s^2 - 10s + 9", quad).with_note(format!(
            "derived: {}",
            derived.as_ref().map(|q| q.to_string()).unwrap_or_else(|| "no finite limit".into())
        )),
    );
    let roots = derived.as_ref().and_then(quadratic_rational_roots);
    let roots_verdict = match &roots {
        Some((x, y)) if *x == Rational::one() && *y == nine => Verdict::Pass,
        Some((x, _)) => Verdict::fail(0, x.clone(), Rational::one()),
        None => Verdict::fail(0, Rational::zero(), Rational::one()),
    };
    let roots_note = match &roots {
        Some((x, y)) => format!("roots {x} and {y}"),
        None => "roots not rational".to_string(),
    };
    details.push(SubVerdict::new("limit quadratic roots are exactly {1, 9}", roots_verdict).with_note(roots_note));

    details.push(nested(nth_root_increasing_check(values, 1, n_hi)?, "r_n > 1"));

    // r_n > r_(n+1) is log-concavity of the n-th roots at n + 1.
    let split = config.exact_to.min(n_hi);
    if split >= 2 {
        details.push(nested(
            nth_root_logconcave_check(values, 2, split, CheckMode::Exact, config.precision)?,
            "r_(n-1) > r_n (exact)",
        ));
    }
    if split < n_hi {
        details.push(nested(
            nth_root_logconcave_check(values, (split + 1).max(2), n_hi, CheckMode::Interval, config.precision)?,
            "r_(n-1) > r_n (interval)",
        ));
    }

    details.push(root_ratio_bound(values, n_hi, config));

    Ok(CriterionReport::from_details(
        format!("limits({})", values.name()),
        (1, hi),
        Strictness::Strict,
        details,
    ))
}

/// `r_n - 1 < threshold`, using `x <= e^x - 1 <= x / (1 - x)` on an enclosure of `ln r_n`.
fn root_ratio_bound(values: &SequenceTable, n: usize, config: &LimitConfig) -> SubVerdict {
    let condition = format!("r_{n} - 1 < {}", config.threshold);
    let mut last = None;
    for bits in config.precision.schedule() {
        let e = root_ratio_log(values, n, bits);
        let (x_lo, x_hi) = (e.lo(), e.hi());
        if x_hi >= Rational::one() {
            last = Some((bits, x_lo, None));
            continue;
        }
        let upper = &x_hi / (Rational::one() - &x_hi);
        let note = format!(
            "r_{n} - 1 in [{}, {}] at {bits} bits",
            x_lo.to_decimal(12),
            upper.to_decimal(12)
        );
        if upper < config.threshold {
            return SubVerdict::new(condition, Verdict::Pass).over(n, n).with_note(note);
        }
        if x_lo >= config.threshold {
            return SubVerdict::new(condition, Verdict::fail(n, x_lo, config.threshold.clone()))
                .over(n, n)
                .with_note(note);
        }
        last = Some((bits, x_lo, Some(upper)));
    }
    let (bits, lo, upper) = last.expect("schedule is never empty");
    let reason = format!(
        "r_{n} - 1 enclosure [{}, {}] straddles the threshold at {bits} bits",
        lo.to_decimal(12),
        upper.map(|u| u.to_decimal(12)).unwrap_or_else(|| "inf".into())
    );
    SubVerdict::new(condition, Verdict::Indeterminate { witness: n as i64, reason }).over(n, n)
}
