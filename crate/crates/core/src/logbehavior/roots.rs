//! Monotonicity and log-concavity of `z_n^{1/n}`.
//!
//! Both reduce to comparisons of integer powers: `z_n^{n+1} < z_{n+1}^n`
//! for increase, and `z_n^{2(n-1)(n+1)} > z_{n-1}^{n(n+1)} z_{n+1}^{n(n-1)}`
//! for strict log-concavity. Exact mode compares the powers directly;
//! interval mode encloses `2(n^2-1) ln z_n - n(n+1) ln z_{n-1} - n(n-1) ln z_{n+1}`.

use num_bigint::{BigInt, BigUint};
use num_traits::pow;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::interval::{ln_enclosure, precision_schedule, Enclosure};
use super::{require_positive, CheckError, CriterionReport, SubVerdict, Verdict};
use crate::exact::{Rational, Strictness};
use crate::sequence::SequenceTable;

/// Largest power, in decimal digits, that exact mode will materialize.
pub const DIGIT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    Exact,
    Interval,
}

/// Fractional bits for interval mode: start, then double up to `max_bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start_bits: 128, max_bits: 4096 }
    }
}

impl PrecisionPolicy {
    /// Default start, capped at `max_bits`.
    pub fn with_max(max_bits: u32) -> Self {
        PrecisionPolicy { start_bits: 128.min(max_bits), max_bits }
    }

    pub fn schedule(&self) -> Vec<u32> {
        precision_schedule(self.start_bits, self.max_bits)
    }
}

fn digits(x: &BigInt) -> u64 {
    (x.bits() as f64 * std::f64::consts::LOG10_2).ceil() as u64 + 1
}

fn value(values: &SequenceTable, n: usize) -> &BigInt {
    values.get(n).expect("range checked")
}

fn magnitude(values: &SequenceTable, n: usize) -> BigUint {
    value(values, n).magnitude().clone()
}

/// `S_n^{n+1} < S_{n+1}^n` for `lo <= n <= hi`, by exact powers.
pub fn nth_root_increasing_check(values: &SequenceTable, lo: usize, hi: usize) -> Result<CriterionReport, CheckError> {
    if lo == 0 || lo > hi {
        return Err(CheckError::InvalidArgument(format!("need 1 <= lo <= hi, got {lo}..={hi}")));
    }
    require_positive(values, lo, hi + 1)?;
    for n in lo..=hi {
        let d = digits(value(values, n)) * (n as u64 + 1);
        if d > DIGIT_BUDGET {
            return Err(CheckError::DigitBudget { index: n, digits: d, budget: DIGIT_BUDGET });
        }
    }
    let verdict = (lo..=hi)
        .into_par_iter()
        .find_map_first(|n| {
            let lhs = pow(value(values, n).clone(), n + 1);
            let rhs = pow(value(values, n + 1).clone(), n);
            (lhs >= rhs).then(|| Verdict::fail(n, Rational::from(lhs), Rational::from(rhs)))
        })
        .unwrap_or(Verdict::Pass);
    let label = values.name();
    let detail = SubVerdict::new(format!("{label}_n^(n+1) < {label}_(n+1)^n"), verdict).over(lo, hi);
    Ok(CriterionReport::from_details(
        format!("nth-root-increasing({label})"),
        (lo as i64, hi as i64),
        Strictness::Strict,
        vec![detail],
    ))
}

/// `S_n^{(n-1)(n+1)} / S_{n-1}^{n(n+1)} - S_{n+1}^{n(n-1)} / S_n^{(n-1)(n+1)}`,
/// which has the sign of the log-concavity gap at `n`.
pub fn nth_root_gap(values: &SequenceTable, n: usize) -> Result<Rational, CheckError> {
    if n < 2 {
        return Err(CheckError::InvalidArgument("n-th root log-concavity needs n >= 2".into()));
    }
    require_positive(values, n - 1, n + 1)?;
    let e = (n - 1) * (n + 1);
    let mid = pow(value(values, n).clone(), e);
    let left = Rational::new(mid.clone(), pow(value(values, n - 1).clone(), n * (n + 1)));
    let right = Rational::new(pow(value(values, n + 1).clone(), n * (n - 1)), mid);
    Ok(left - right)
}

fn exact_verdict(values: &SequenceTable, n: usize) -> Result<(Verdict, String), CheckError> {
    let e_mid = 2 * (n - 1) * (n + 1);
    let d = digits(value(values, n)) * e_mid as u64;
    if d > DIGIT_BUDGET {
        return Err(CheckError::DigitBudget { index: n, digits: d, budget: DIGIT_BUDGET });
    }
    let lhs = pow(value(values, n).clone(), e_mid);
    let rhs = pow(value(values, n - 1).clone(), n * (n + 1)) * pow(value(values, n + 1).clone(), n * (n - 1));
    let note = format!("exact comparison of integers with about {d} digits");
    let verdict = if lhs > rhs { Verdict::Pass } else { Verdict::fail(n, Rational::from(lhs), Rational::from(rhs)) };
    Ok((verdict, note))
}

fn gap_enclosure(values: &SequenceTable, n: usize, bits: u32) -> Enclosure {
    let ln = |k: usize| ln_enclosure(&magnitude(values, k), bits);
    let n_i = n as i64;
    ln(n)
        .mul_int(2 * (n_i * n_i - 1))
        .sub(&ln(n - 1).mul_int(n_i * (n_i + 1)))
        .sub(&ln(n + 1).mul_int(n_i * (n_i - 1)))
}

/// Verdict plus the precision that decided it.
fn interval_verdict(values: &SequenceTable, n: usize, policy: PrecisionPolicy) -> (Verdict, u32, String) {
    let mut last = None;
    for bits in policy.schedule() {
        let g = gap_enclosure(values, n, bits);
        if g.is_positive() {
            return (Verdict::Pass, bits, format!("log gap in {g} at {bits} bits"));
        }
        if g.is_negative() {
            let note = format!("log gap in {g} at {bits} bits");
            return (Verdict::fail(n, g.hi(), Rational::zero()), bits, note);
        }
        last = Some((g, bits));
    }
    let (g, bits) = last.expect("schedule is never empty");
    let reason = format!("log gap enclosure {g} contains 0 at {bits} bits");
    (Verdict::Indeterminate { witness: n as i64, reason: reason.clone() }, bits, reason)
}

/// Strict log-concavity of `z^{1/n}` at a single `n >= 2`.
pub fn nth_root_logconcave_at(
    values: &SequenceTable,
    n: usize,
    mode: CheckMode,
    policy: PrecisionPolicy,
) -> Result<SubVerdict, CheckError> {
    if n < 2 {
        return Err(CheckError::InvalidArgument("n-th root log-concavity needs n >= 2".into()));
    }
    require_positive(values, n - 1, n + 1)?;
    let (verdict, note) = match mode {
        CheckMode::Exact => exact_verdict(values, n)?,
        CheckMode::Interval => {
            let (v, _, note) = interval_verdict(values, n, policy);
            (v, note)
        }
    };
    let label = values.name();
    Ok(SubVerdict::new(
        format!("{label}_n^(2(n-1)(n+1)) > {label}_(n-1)^(n(n+1)) {label}_(n+1)^(n(n-1))"),
        verdict,
    )
    .over(n, n)
    .with_note(note))
}

/// Strict log-concavity of `z^{1/n}` for `lo <= n <= hi` in one mode.
pub fn nth_root_logconcave_check(
    values: &SequenceTable,
    lo: usize,
    hi: usize,
    mode: CheckMode,
    policy: PrecisionPolicy,
) -> Result<CriterionReport, CheckError> {
    if lo < 2 || lo > hi {
        return Err(CheckError::InvalidArgument(format!("need 2 <= lo <= hi, got {lo}..={hi}")));
    }
    require_positive(values, lo - 1, hi + 1)?;
    let label = values.name();
    let condition = format!("{label}_n^(2(n-1)(n+1)) > {label}_(n-1)^(n(n+1)) {label}_(n+1)^(n(n-1))");
    let detail = match mode {
        CheckMode::Exact => {
            if let Some(n) = (lo..=hi).find(|&n| digits(value(values, n)) * (2 * (n * n - 1)) as u64 > DIGIT_BUDGET) {
                let d = digits(value(values, n)) * (2 * (n * n - 1)) as u64;
                return Err(CheckError::DigitBudget { index: n, digits: d, budget: DIGIT_BUDGET });
            }
            let verdicts: Vec<Verdict> = (lo..=hi)
                .into_par_iter()
                .map(|n| exact_verdict(values, n).map(|(v, _)| v))
                .collect::<Result<_, _>>()?;
            SubVerdict::new(condition, Verdict::combine(&verdicts))
                .over(lo, hi)
                .with_note("exact big-integer powers")
        }
        CheckMode::Interval => {
            let results: Vec<(Verdict, u32, String)> =
                (lo..=hi).into_par_iter().map(|n| interval_verdict(values, n, policy)).collect();
            let max_bits = results.iter().map(|r| r.1).max().unwrap_or(policy.start_bits);
            let verdict = Verdict::combine(results.iter().map(|r| &r.0));
            SubVerdict::new(condition, verdict).over(lo, hi).with_note(format!(
                "logarithm enclosures, {} to {} fractional bits; highest needed {max_bits}",
                policy.start_bits, policy.max_bits
            ))
        }
    };
    Ok(CriterionReport::from_details(
        format!("nth-root-logconcave({label})"),
        (lo as i64, hi as i64),
        Strictness::Strict,
        vec![detail],
    ))
}

/// Enclosure of `ln r_n = ln z_{n+1} / (n+1) - ln z_n / n`.
pub(crate) fn root_ratio_log(values: &SequenceTable, n: usize, bits: u32) -> Enclosure {
    let ln = |k: usize| ln_enclosure(&magnitude(values, k), bits);
    ln(n + 1).div_int(n as u64 + 1).sub(&ln(n).div_int(n as u64))
}
