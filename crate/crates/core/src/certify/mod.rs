//! The claim registry: every log-behavior statement about `S_n` bound to
//! concrete checker runs, assembled into one reproducible report.

mod claims;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::logbehavior::{CheckError, CriterionReport, PrecisionPolicy, Verdict};
use crate::sequence::{f_table_with, sun_table_with, u_table, BinomialCache, QuotientTable, SequenceTable};

pub use report::{render_criterion, render_report, CertificationReport, ClaimResult, Format, Outcome, REPORT_SCHEMA, SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
}

impl ClaimId {
    pub const ALL: [ClaimId; 12] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12,
    ];

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::C1 => "four-term recurrence for S_n",
            ClaimId::C2 => "identity linking S_n and f_n; integrality of f_n",
            ClaimId::C3 => "recurrences for u_n = 4n S_n and the three-term recurrence for S_n",
            ClaimId::C4 => "strict log-convexity of S_n by three routes",
            ClaimId::C5 => "interlacing h(n-1) < s_n < h(n) with h(n) = 9 - 9/(2n^2)",
            ClaimId::C6 => "s_n lies strictly between the roots of a(n)x^2 + b(n)x + c(n)",
            ClaimId::C7 => "ratio log-concavity of S_n",
            ClaimId::C8 => "S_n^(1/n) strictly increasing",
            ClaimId::C9 => "S_n^(1/n) strictly log-concave",
            ClaimId::C10 => "limit diagnostics: s_n -> 9 and r_n -> 1",
            ClaimId::C11 => "closed-form polynomial and rational-function identities",
            ClaimId::C12 => "limit quadratic s^2 - 10s + 9 has roots exactly 1 and 9",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::C1 => "9(n+1)^2 S_n - (19n^2+74n+87) S_(n+1) + (n+3)(11n+29) S_(n+2) - (n+3)^2 S_(n+3) = 0 for n >= 0",
            ClaimId::C2 => "4n S_n = (n+1)^2 f_n - n^2 f_(n-1) for n >= 0, every f_n an integer",
            ClaimId::C3 => "residuals of the order-three and order-two recurrences on u_n (n >= 1) and of a(n) S_(n+1) + b(n) S_n + c(n) S_(n-1) (n >= 1) vanish",
            ClaimId::C4 => "S_n^2 < S_(n-1) S_(n+1) for n >= 1",
            ClaimId::C5 => "h(n-1) < S_n / S_(n-1) < h(n) for n >= 2",
            ClaimId::C6 => "X(n) < s_n < Y(n) for n >= 1, X(1) ~ 1.03059, Y(1) ~ 8.00512",
            ClaimId::C7 => "s_n^2 > s_(n-1) s_(n+1) for n >= 2, s_n = S_n / S_(n-1)",
            ClaimId::C8 => "S_n^(n+1) < S_(n+1)^n for n >= 1",
            ClaimId::C9 => "S_n^(2(n-1)(n+1)) > S_(n-1)^(n(n+1)) S_(n+1)^(n(n-1)) for n >= 2",
            ClaimId::C10 => "9/(2n^2) < 9 - s_n < 9/(2(n-1)^2); r_n > 1 decreasing with r_n - 1 below the threshold at the range end",
            ClaimId::C11 => "discriminant, square comparisons, bound steps and the ratio quartic match their closed forms and signs",
            ClaimId::C12 => "s^2 - 10s + 9 = 0 has roots {1, 9}",
        }
    }

    fn needs_tables(self) -> bool {
        !matches!(self, ClaimId::C11 | ClaimId::C12)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown claim {s:?} (expected C1..C12)"))
    }
}

/// Replaces one value of the `S_n` table before any claim runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corruption {
    pub index: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyConfig {
    /// Direct-sum table size; strict log-convexity runs to `values_to - 1`.
    pub values_to: usize,
    /// Upper end of recurrence, quotient and interlacing checks.
    pub ratio_to: usize,
    pub nth_root_increasing_to: usize,
    /// Largest `n` decided by exact powers in the n-th root log-concavity claim.
    pub root_exact_to: usize,
    pub root_to: usize,
    pub precision: PrecisionPolicy,
    pub limit_threshold: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claims: Option<Vec<ClaimId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corruption: Option<Corruption>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            values_to: 500,
            ratio_to: 300,
            nth_root_increasing_to: 200,
            root_exact_to: 60,
            root_to: 300,
            precision: PrecisionPolicy::default(),
            limit_threshold: Rational::new(1, 100),
            claims: None,
            corruption: None,
        }
    }
}

impl CertifyConfig {
    /// Restricts the run to `ids` (sorted, deduplicated).
    pub fn only(mut self, ids: &[ClaimId]) -> Self {
        let mut ids = ids.to_vec();
        ids.sort();
        ids.dedup();
        self.claims = Some(ids);
        self
    }

    pub fn selected(&self) -> Vec<ClaimId> {
        match &self.claims {
            Some(ids) => ClaimId::ALL.into_iter().filter(|id| ids.contains(id)).collect(),
            None => ClaimId::ALL.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<(), CertifyError> {
        let bad = |msg: String| Err(CertifyError::InvalidConfig(msg));
        if self.values_to < 2 {
            return bad("values_to must be at least 2".into());
        }
        if self.ratio_to < 4 {
            return bad("ratio_to must be at least 4".into());
        }
        if self.nth_root_increasing_to < 1 {
            return bad("nth_root_increasing_to must be at least 1".into());
        }
        if self.root_exact_to < 2 || self.root_to < self.root_exact_to {
            return bad(format!(
                "need 2 <= root_exact_to <= root_to, got {} and {}",
                self.root_exact_to, self.root_to
            ));
        }
        let p = self.precision;
        if p.start_bits == 0 || p.max_bits < p.start_bits {
            return bad(format!("need 0 < start_bits <= max_bits, got {} and {}", p.start_bits, p.max_bits));
        }
        if !self.limit_threshold.is_positive() {
            return bad("limit threshold must be positive".into());
        }
        if matches!(&self.claims, Some(ids) if ids.is_empty()) {
            return bad("claim filter is empty".into());
        }
        Ok(())
    }

    /// Largest index of `S_n` any selected claim reads.
    fn table_end(&self) -> usize {
        self.values_to
            .max(self.ratio_to + 1)
            .max(self.root_to + 1)
            .max(self.nth_root_increasing_to + 1)
    }
}

/// Shared read-only inputs, built once before the claims run.
pub(crate) struct Tables {
    pub s: SequenceTable,
    pub q: Result<QuotientTable, CheckError>,
    pub f: Option<Result<SequenceTable, CheckError>>,
    pub u: Option<SequenceTable>,
}

fn build_tables(config: &CertifyConfig, selected: &[ClaimId]) -> Result<Tables, CertifyError> {
    let end = config.table_end();
    let cache = BinomialCache::new(end);
    let mut s = sun_table_with(&cache, end);
    if let Some(c) = &config.corruption {
        s = s
            .with_value(c.index, BigInt::from(c.value))
            .map_err(|e| CertifyError::InvalidConfig(format!("corruption: {e}")))?;
    }
    let q = QuotientTable::from_sequence(&s).map_err(CheckError::from);
    let f = selected
        .contains(&ClaimId::C2)
        .then(|| f_table_with(&cache, config.values_to).map_err(CheckError::from));
    let u = selected.contains(&ClaimId::C3).then(|| u_table(&s));
    Ok(Tables { s, q, f, u })
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs every selected claim. Claim failures are recorded, never raised;
/// only an invalid configuration is an error.
pub fn run_claims(config: &CertifyConfig) -> Result<CertificationReport, CertifyError> {
    config.validate()?;
    let total = Instant::now();
    let selected = config.selected();
    let mut timings = BTreeMap::new();

    let tables = if selected.iter().any(|id| id.needs_tables()) {
        let t = Instant::now();
        let tables = build_tables(config, &selected)?;
        timings.insert("tables".to_string(), elapsed_ms(t));
        Some(tables)
    } else {
        None
    };

    let results: Vec<(ClaimResult, f64)> = selected
        .par_iter()
        .map(|&id| {
            let t = Instant::now();
            let result = claims::run(id, config, tables.as_ref());
            (result, elapsed_ms(t))
        })
        .collect();

    let mut claims = Vec::with_capacity(results.len());
    for (result, ms) in results {
        timings.insert(result.id.to_string(), ms);
        claims.push(result);
    }
    timings.insert("total".to_string(), elapsed_ms(total));
    Ok(CertificationReport::new(config.clone(), claims, timings))
}

/// Verdict of a claim from its reports and an optional hard error.
pub(crate) fn claim_verdict(reports: &[CriterionReport], error: Option<&CheckError>) -> Verdict {
    let from_error = error.map(|e| Verdict::fail(e.index().unwrap_or(0), Rational::zero(), Rational::zero()));
    Verdict::combine(reports.iter().map(|r| &r.verdict).chain(from_error.as_ref()))
}
