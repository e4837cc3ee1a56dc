use serde::{Deserialize, Serialize};

use crate::exact::{Rational, SignCertificate, Strictness};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// `lhs` and `rhs` are the two sides of the violated comparison at `witness`.
    Fail { witness: i64, lhs: Rational, rhs: Rational },
    Indeterminate { witness: i64, reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Verdict::Indeterminate { .. })
    }

    pub fn witness(&self) -> Option<i64> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness, .. } | Verdict::Indeterminate { witness, .. } => Some(*witness),
        }
    }

    pub fn fail(witness: impl TryInto<i64>, lhs: Rational, rhs: Rational) -> Self {
        Verdict::Fail { witness: witness.try_into().ok().unwrap_or(i64::MAX), lhs, rhs }
    }

    /// Fail verdicts first (smallest witness), then indeterminate, then pass.
    pub fn combine<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> Verdict {
        let mut fail: Option<&Verdict> = None;
        let mut indeterminate: Option<&Verdict> = None;
        for v in verdicts {
            let slot = match v {
                Verdict::Pass => continue,
                Verdict::Fail { .. } => &mut fail,
                Verdict::Indeterminate { .. } => &mut indeterminate,
            };
            if slot.is_none_or(|cur| v.witness() < cur.witness()) {
                *slot = Some(v);
            }
        }
        fail.or(indeterminate).cloned().unwrap_or(Verdict::Pass)
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// One condition inside a criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubVerdict {
    pub condition: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SignCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Recorded for the reader but excluded from the criterion verdict.
    #[serde(default, skip_serializing_if = "is_false")]
    pub informational: bool,
}

impl SubVerdict {
    pub fn new(condition: impl Into<String>, verdict: Verdict) -> Self {
        SubVerdict {
            condition: condition.into(),
            verdict,
            range: None,
            certificate: None,
            note: None,
            informational: false,
        }
    }

    pub fn over(mut self, lo: impl TryInto<i64>, hi: impl TryInto<i64>) -> Self {
        self.range = Some((lo.try_into().ok().unwrap_or(i64::MIN), hi.try_into().ok().unwrap_or(i64::MAX)));
        self
    }

    pub fn with_certificate(mut self, cert: SignCertificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Outcome of running one checker over a range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub range: (i64, i64),
    pub strictness: Strictness,
    pub verdict: Verdict,
    pub details: Vec<SubVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<f64>,
}

impl CriterionReport {
    /// Verdict is the combination of the non-informational details.
    pub fn from_details(
        criterion: impl Into<String>,
        range: (i64, i64),
        strictness: Strictness,
        details: Vec<SubVerdict>,
    ) -> Self {
        let verdict = Verdict::combine(details.iter().filter(|d| !d.informational).map(|d| &d.verdict));
        CriterionReport {
            criterion: criterion.into(),
            range,
            strictness,
            verdict,
            details,
            duration_ms: None,
        }
    }

    pub fn detail(&self, condition_prefix: &str) -> Option<&SubVerdict> {
        self.details.iter().find(|d| d.condition.starts_with(condition_prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fail(w: i64) -> Verdict {
        Verdict::fail(w, Rational::zero(), Rational::one())
    }

    #[test]
    fn combine_prefers_smallest_failure() {
        let vs = [Verdict::Pass, fail(7), Verdict::Indeterminate { witness: 1, reason: "x".into() }, fail(3)];
        assert_eq!(Verdict::combine(&vs).witness(), Some(3));
        assert!(Verdict::combine(&vs).is_fail());
        assert!(Verdict::combine(&[Verdict::Pass]).is_pass());
        assert!(Verdict::combine(&[Verdict::Pass, Verdict::Indeterminate { witness: 4, reason: String::new() }])
            .is_indeterminate());
    }

    #[test]
    fn informational_details_do_not_decide() {
        let r = CriterionReport::from_details(
            "demo",
            (1, 5),
            Strictness::Strict,
            vec![SubVerdict::new("a", Verdict::Pass), SubVerdict::new("b", fail(5)).informational()],
        );
        assert!(r.verdict.is_pass());
        let json = r.to_json();
        assert!(json.contains("\"status\": \"fail\""));
        assert!(json.contains("\"lhs\": \"0/1\""));
        assert!(json.contains("\"informational\": true"));
        assert!(!json.contains("duration_ms"));
    }
}
