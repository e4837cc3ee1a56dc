use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use logcert::certify::{render_criterion, render_report, CertifyConfig, ClaimId, Format, Outcome};
use logcert::exact::Strictness;
use logcert::logbehavior::{
    cgw_ratio_check, check_log_concave_range, check_log_convex_range, interlacing_check, limit_diagnostics,
    nth_root_gap, nth_root_increasing_check, nth_root_logconcave_at, nth_root_logconcave_check, theorem21_check,
    BoundFunction, CheckError, CheckMode, CriterionReport, Direction, LimitConfig, PrecisionPolicy, SubVerdict,
};
use logcert::sequence::{sun_table, QuotientTable, SequenceName, SequenceTable};
use logcert::{run_claims, sun};

use crate::args::{CertifyArgs, CheckArgs, FormatArg, ModeArg, Output, SeqArgs};
use crate::{EXIT_DATA, EXIT_IO, EXIT_USAGE};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Data(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<logcert::sequence::SequenceError> for CliError {
    fn from(e: logcert::sequence::SequenceError) -> Self {
        CliError::Data(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `--format` if given, else inferred from the `--out` extension, else text.
fn format_of(output: &Output) -> Format {
    match output.format {
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Text) => Format::Text,
        None => match output.out.as_deref().and_then(Path::extension).and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            _ => Format::Text,
        },
    }
}

fn emit(output: &Output, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn range(from: usize, to: usize) -> Result<(usize, usize), CliError> {
    if from > to {
        return Err(usage(format!("empty range {from}..{to}")));
    }
    Ok((from, to))
}

pub fn seq(a: SeqArgs) -> Result<u8, CliError> {
    let name: SequenceName = a.name.parse().map_err(usage)?;
    let from = a.from.unwrap_or(name.first_index());
    let (from, to) = range(from, a.to.unwrap_or(from + 10))?;
    if from < name.first_index() {
        return Err(usage(format!("{} starts at index {}", a.name, name.first_index())));
    }
    let table = name.table(to)?.slice(from, to)?;
    let text = match format_of(&a.output) {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
        Format::Text => table
            .values()
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}_{} = {v}\n", table.name(), from + i))
            .collect(),
    };
    emit(&a.output, &text)?;
    Ok(0)
}

fn policy(precision: Option<u32>) -> PrecisionPolicy {
    precision.map(PrecisionPolicy::with_max).unwrap_or_default()
}

fn mode(m: Option<ModeArg>) -> CheckMode {
    match m {
        Some(ModeArg::Interval) => CheckMode::Interval,
        _ => CheckMode::Exact,
    }
}

fn h_bound() -> Result<BoundFunction, CliError> {
    Ok(BoundFunction::new(sun::h(), 1)?)
}

fn quotients(upto: usize) -> Result<QuotientTable, CliError> {
    Ok(QuotientTable::from_sequence(&sun_table(upto))?)
}

fn integer_table(seq: &str, upto: usize) -> Result<SequenceTable, CliError> {
    let name: SequenceName = seq.parse().map_err(usage)?;
    Ok(name.table(upto)?)
}

pub fn check(a: CheckArgs) -> Result<u8, CliError> {
    let start = Instant::now();
    if let Ok(id) = a.target.parse::<ClaimId>() {
        return check_claim(id, &a, start);
    }
    let strictness = if a.weak { Strictness::Weak } else { Strictness::Strict };
    let policy = policy(a.precision);
    let span = |from: usize, to: usize| range(a.from.unwrap_or(from), a.to.unwrap_or(to));
    let mut report = match a.target.as_str() {
        "logconvex" | "logconcave" => {
            let (lo, hi) = span(1, 100)?;
            if lo == 0 {
                return Err(usage("--from must be at least 1"));
            }
            let convex = a.target == "logconvex";
            if a.seq == "s" {
                let q = quotients(hi + 2)?;
                if convex {
                    check_log_convex_range(&q, strictness, lo, hi)?
                } else {
                    check_log_concave_range(&q, strictness, lo, hi)?
                }
            } else {
                let t = integer_table(&a.seq, hi + 1)?;
                if convex {
                    check_log_convex_range(&t, strictness, lo, hi)?
                } else {
                    check_log_concave_range(&t, strictness, lo, hi)?
                }
            }
        }
        "theorem21" => {
            let (lo, hi) = span(1, 300)?;
            let q = quotients(hi + 1)?;
            let (p, b, c) = (sun::three_term_a(), sun::three_term_b(), sun::three_term_c());
            theorem21_check(&p, &b, &c, lo.saturating_sub(1) as i64, &q, hi as i64, strictness)?
        }
        "interlacing" => {
            let (lo, hi) = span(2, 300)?;
            if lo < 2 {
                return Err(usage("interlacing with h starts at n = 2"));
            }
            let q = quotients(hi + 1)?;
            interlacing_check(&q, &h_bound()?, lo as i64 - 1, hi as i64, Direction::Increasing, strictness)?
        }
        "cgw" => {
            let (lo, hi) = span(3, 300)?;
            if lo < 3 {
                return Err(usage("the ratio log-concavity criterion starts at n = 3"));
            }
            let q = quotients(hi + 2)?;
            cgw_ratio_check(&sun::cgw_u(), &sun::cgw_v(), &h_bound()?, lo as i64 - 2, &q, hi as i64, strictness)?
        }
        "nthroot-increasing" => {
            let (lo, hi) = span(1, 200)?;
            nth_root_increasing_check(&integer_table(&a.seq, hi + 1)?, lo, hi)?
        }
        "nthroot-logconcave" => {
            let (lo, hi) = match a.n {
                Some(n) => (n, n),
                None => span(2, 60)?,
            };
            if lo < 2 {
                return Err(usage("n-th root log-concavity starts at n = 2"));
            }
            nth_root_logconcave_check(&integer_table(&a.seq, hi + 1)?, lo, hi, mode(a.mode), policy)?
        }
        "limits" => {
            let hi = a.to.unwrap_or(300);
            let s = sun_table(hi + 1);
            let q = QuotientTable::from_sequence(&s)?;
            let config = LimitConfig { precision: policy, ..LimitConfig::default() };
            limit_diagnostics(&q, &s, hi, &config)?
        }
        other => return Err(usage(format!("unknown claim or checker {other:?}"))),
    };
    report.duration_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    emit(&a.output, &render_criterion(&report, format_of(&a.output)))?;
    Ok(Outcome::of(&report.verdict).exit_code() as u8)
}

fn check_claim(id: ClaimId, a: &CheckArgs, start: Instant) -> Result<u8, CliError> {
    if a.from.is_some() {
        return Err(usage("claims have fixed starting indices; --from applies to checkers only"));
    }
    if id == ClaimId::C9 {
        if let Some(n) = a.n {
            return check_root_at(n, a, start);
        }
    }
    let mut config = CertifyConfig { precision: policy(a.precision), ..CertifyConfig::default() }.only(&[id]);
    if let Some(to) = a.to {
        match id {
            ClaimId::C2 => config.values_to = to,
            ClaimId::C4 => {
                config.ratio_to = to;
                config.values_to = to + 1;
            }
            ClaimId::C8 => config.nth_root_increasing_to = to,
            ClaimId::C9 => {
                config.root_to = to;
                config.root_exact_to = config.root_exact_to.min(to);
            }
            ClaimId::C11 | ClaimId::C12 => {}
            _ => config.ratio_to = to,
        }
    }
    // Keep the shared table no larger than the selected claim needs.
    if !matches!(id, ClaimId::C2 | ClaimId::C4) {
        config.values_to = config.values_to.min(config.ratio_to + 1);
    }
    if id != ClaimId::C9 {
        config.root_to = config.root_to.min(config.ratio_to).max(config.root_exact_to);
    }
    let report = run_claims(&config).map_err(|e| usage(e.to_string()))?;
    emit(&a.output, &render_report(&report, format_of(&a.output)))?;
    Ok(report.exit_code() as u8)
}

/// n-th root log-concavity at a single `n`, with the exact gap in the note.
fn check_root_at(n: usize, a: &CheckArgs, start: Instant) -> Result<u8, CliError> {
    if n < 2 {
        return Err(usage("n-th root log-concavity starts at n = 2"));
    }
    let s = sun_table(n + 1);
    let mode = mode(a.mode);
    let mut detail = nth_root_logconcave_at(&s, n, mode, policy(a.precision))?;
    if mode == CheckMode::Exact {
        let gap = nth_root_gap(&s, n)?;
        detail = detail.with_note(format!("gap = {gap}"));
    }
    let details: Vec<SubVerdict> = vec![detail];
    let mut report = CriterionReport::from_details(
        format!("nth-root log-concavity({})", s.name()),
        (n as i64, n as i64),
        Strictness::Strict,
        details,
    );
    report.duration_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    emit(&a.output, &render_criterion(&report, format_of(&a.output)))?;
    Ok(Outcome::of(&report.verdict).exit_code() as u8)
}

pub fn certify(a: CertifyArgs) -> Result<u8, CliError> {
    let defaults = CertifyConfig::default();
    let mut config = CertifyConfig {
        values_to: a.values_to.unwrap_or(defaults.values_to),
        ratio_to: a.ratio_to.unwrap_or(defaults.ratio_to),
        nth_root_increasing_to: a.nthroot_increasing_to.unwrap_or(defaults.nth_root_increasing_to),
        root_exact_to: a.root_exact_to.unwrap_or(defaults.root_exact_to),
        root_to: a.root_to.unwrap_or(defaults.root_to),
        precision: policy(a.precision),
        ..defaults
    };
    if !a.claims.is_empty() {
        let ids = a
            .claims
            .iter()
            .map(|c| c.parse::<ClaimId>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?;
        config = config.only(&ids);
    }
    let report = run_claims(&config).map_err(|e| usage(e.to_string()))?;
    emit(&a.output, &render_report(&report, format_of(&a.output)))?;
    Ok(report.exit_code() as u8)
}
