use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CertifyConfig, ClaimId};
use crate::logbehavior::{CriterionReport, SubVerdict, Verdict};

pub const SCHEMA: &str = "logcert-report/1";

/// JSON Schema (draft 2020-12) for the serialized [`CertificationReport`].
pub const REPORT_SCHEMA: &str = include_str!("../../schema/logcert-report-1.json");

/// Scope limits stated in every report.
const NOTES: [&str; 4] = [
    "statements for all n are certified only where a sign certificate or closed-form identity is recorded; range checks cover the stated ranges",
    "the limits s_n -> 9 and r_n -> 1 are supported by finite-range squeeze and threshold checks, not proved",
    "the lower end printed for the root interval is recorded as informational; the vertex -b(n)/(2a(n)) is used instead",
    "interval-mode verdicts are pass or fail only when the enclosure excludes zero; otherwise indeterminate",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Indeterminate,
}

impl Outcome {
    pub fn of(verdict: &Verdict) -> Self {
        match verdict {
            Verdict::Pass => Outcome::Pass,
            Verdict::Fail { .. } => Outcome::Fail,
            Verdict::Indeterminate { .. } => Outcome::Indeterminate,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Indeterminate => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Indeterminate => "INDETERMINATE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimResult {
    pub id: ClaimId,
    pub description: String,
    pub statement: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub reports: Vec<CriterionReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificationReport {
    pub schema: String,
    pub tool_version: String,
    pub config: CertifyConfig,
    pub notes: Vec<String>,
    pub claims: Vec<ClaimResult>,
    pub overall: Outcome,
    /// Wall-clock milliseconds per phase; the only nondeterministic field.
    pub timings: BTreeMap<String, f64>,
}

impl CertificationReport {
    pub(crate) fn new(config: CertifyConfig, claims: Vec<ClaimResult>, timings: BTreeMap<String, f64>) -> Self {
        let overall = Outcome::of(&Verdict::combine(claims.iter().map(|c| &c.verdict)));
        CertificationReport {
            schema: SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            notes: NOTES.iter().map(|s| s.to_string()).collect(),
            claims,
            overall,
            timings,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.overall.exit_code()
    }

    pub fn claim(&self, id: ClaimId) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Copy with the timings cleared, for byte comparisons between runs.
    pub fn without_timings(&self) -> Self {
        CertificationReport { timings: BTreeMap::new(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected json, text or csv)")),
        }
    }
}

fn status(v: &Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail { .. } => "fail",
        Verdict::Indeterminate { .. } => "indeterminate",
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".to_string(),
        Verdict::Fail { witness, lhs, rhs } => format!("fail at n = {witness} ({lhs} vs {rhs})"),
        Verdict::Indeterminate { witness, reason } => format!("indeterminate at n = {witness}: {reason}"),
    }
}

fn range_text(range: (i64, i64)) -> String {
    match range {
        (lo, i64::MAX) => format!("n >= {lo}"),
        (lo, hi) => format!("{lo}..={hi}"),
    }
}

fn criterion_text(out: &mut String, r: &CriterionReport, indent: &str) {
    let _ = writeln!(out, "{indent}{} [{}]: {}", r.criterion, range_text(r.range), verdict_text(&r.verdict));
    for d in &r.details {
        let tag = if d.informational { " (informational)" } else { "" };
        let range = d.range.map(|r| format!(" [{}]", range_text(r))).unwrap_or_default();
        let _ = writeln!(out, "{indent}  - {}{range}{tag}: {}", d.condition, verdict_text(&d.verdict));
        if let Some(note) = &d.note {
            let _ = writeln!(out, "{indent}      {note}");
        }
    }
}

const CSV_HEADER: [&str; 11] =
    ["claim", "criterion", "condition", "range_lo", "range_hi", "status", "witness", "lhs", "rhs", "informational", "note"];

fn csv_rows(w: &mut csv::Writer<Vec<u8>>, claim: &str, r: &CriterionReport) {
    let row = |d: &SubVerdict| {
        let (lo, hi) = d.range.map(|(a, b)| (a.to_string(), b.to_string())).unwrap_or_default();
        let (lhs, rhs) = match &d.verdict {
            Verdict::Fail { lhs, rhs, .. } => (lhs.to_string(), rhs.to_string()),
            _ => (String::new(), String::new()),
        };
        let note = match &d.verdict {
            Verdict::Indeterminate { reason, .. } => reason.clone(),
            _ => d.note.clone().unwrap_or_default(),
        };
        [
            claim.to_string(),
            r.criterion.clone(),
            d.condition.clone(),
            lo,
            hi,
            status(&d.verdict).to_string(),
            d.verdict.witness().map(|w| w.to_string()).unwrap_or_default(),
            lhs,
            rhs,
            d.informational.to_string(),
            note,
        ]
    };
    for d in &r.details {
        w.write_record(row(d)).expect("in-memory csv write");
    }
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

/// Renders one checker report.
pub fn render_criterion(report: &CriterionReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = String::new();
            criterion_text(&mut out, report, "");
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory csv write");
            csv_rows(&mut w, "", report);
            csv_finish(w)
        }
    }
}

/// Renders the full certification report. JSON and CSV output is identical
/// across runs apart from the timings, which CSV omits.
pub fn render_report(report: &CertificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "certification report ({}, version {})", report.schema, report.tool_version);
            for c in &report.claims {
                let _ = writeln!(out, "{} {}: {}", c.id, Outcome::of(&c.verdict).label(), c.description);
                let _ = writeln!(out, "  {}", c.statement);
                if let Some(e) = &c.error {
                    let _ = writeln!(out, "  error: {e}");
                }
                for r in &c.reports {
                    criterion_text(&mut out, r, "  ");
                }
            }
            let _ = writeln!(out, "notes:");
            for n in &report.notes {
                let _ = writeln!(out, "  - {n}");
            }
            let _ = writeln!(out, "overall: {}", report.overall.label());
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory csv write");
            for c in &report.claims {
                let id = c.id.to_string();
                if let Some(e) = &c.error {
                    let witness = c.verdict.witness().map(|w| w.to_string()).unwrap_or_default();
                    let record = [id.as_str(), "", "error", "", "", status(&c.verdict), &witness, "", "", "false", e];
                    w.write_record(record).expect("in-memory csv write");
                }
                for r in &c.reports {
                    csv_rows(&mut w, &id, r);
                }
            }
            csv_finish(w)
        }
    }
}
