//! Checkers for log-convexity, interlacing bounds, ratio log-concavity,
//! n-th root monotonicity and limits. Every checker returns a
//! [`CriterionReport`] whose failures carry the smallest witness index.

mod bound;
mod cgw;
mod convexity;
pub mod interval;
mod interlacing;
mod limits;
mod report;
mod roots;
mod symbolic;
mod theorem21;

pub use bound::BoundFunction;
pub use cgw::cgw_ratio_check;
pub use convexity::{check_log_concave_range, check_log_convex_range};
pub use interlacing::{interlacing_check, Direction};
pub use limits::{limit_diagnostics, quadratic_rational_roots, LimitConfig};
pub use report::{CriterionReport, SubVerdict, Verdict};
pub use roots::{
    nth_root_gap, nth_root_increasing_check, nth_root_logconcave_at, nth_root_logconcave_check, CheckMode,
    PrecisionPolicy, DIGIT_BUDGET,
};
pub use symbolic::{identity_detail, tail_sign_detail, value_detail};
pub use theorem21::theorem21_check;

use thiserror::Error;

use crate::exact::ExactError;
use crate::sequence::SequenceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("{label}: terms {lo}..={hi} are required but not available")]
    MissingRange { label: String, lo: usize, hi: usize },
    #[error("{label}: term {index} is not positive")]
    NotPositive { label: String, index: usize },
    #[error("bound function undefined at n = {index}")]
    BoundUndefined { index: i64 },
    #[error("exact comparison at n = {index} needs about {digits} digits, above the budget of {budget}")]
    DigitBudget { index: usize, digits: u64, budget: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

impl CheckError {
    pub fn index(&self) -> Option<i64> {
        match self {
            CheckError::NotPositive { index, .. } => Some(*index as i64),
            CheckError::BoundUndefined { index } => Some(*index),
            CheckError::DigitBudget { index, .. } => Some(*index as i64),
            CheckError::Sequence(e) => e.index().map(|i| i as i64),
            _ => None,
        }
    }
}

/// Requires `lo..=hi` to be present and positive in `values`.
pub(crate) fn require_positive<T: crate::sequence::Terms + ?Sized>(
    values: &T,
    lo: usize,
    hi: usize,
) -> Result<(), CheckError> {
    if !values.covers(lo, hi) {
        return Err(CheckError::MissingRange { label: values.label().to_string(), lo, hi });
    }
    for n in lo..=hi {
        if !values.term(n).unwrap().is_positive() {
            return Err(CheckError::NotPositive { label: values.label().to_string(), index: n });
        }
    }
    Ok(())
}

pub(crate) fn require_covered<T: crate::sequence::Terms + ?Sized>(
    values: &T,
    lo: usize,
    hi: usize,
) -> Result<(), CheckError> {
    if values.covers(lo, hi) {
        Ok(())
    } else {
        Err(CheckError::MissingRange { label: values.label().to_string(), lo, hi })
    }
}

/// Smallest `n` in `lo..=hi` where `test` reports a violation, scanned in parallel.
pub(crate) fn first_violation<F>(lo: i64, hi: i64, test: F) -> Verdict
where
    F: Fn(i64) -> Option<Verdict> + Sync,
{
    use rayon::prelude::*;
    if lo > hi {
        return Verdict::Pass;
    }
    (lo..=hi).into_par_iter().find_map_first(&test).unwrap_or(Verdict::Pass)
}
