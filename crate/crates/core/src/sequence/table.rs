use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::SequenceError;
use crate::exact::Rational;

/// Read access to a contiguous run of exact terms, integer or rational.
pub trait Terms {
    fn label(&self) -> &str;
    /// `None` when empty.
    fn indices(&self) -> Option<RangeInclusive<usize>>;
    fn term(&self, n: usize) -> Option<Rational>;

    fn covers(&self, lo: usize, hi: usize) -> bool {
        lo > hi || self.indices().is_some_and(|r| *r.start() <= lo && hi <= *r.end())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    DirectSum,
    Recurrence,
}

/// Exact integer values of a sequence over `start..start + len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    name: String,
    start: usize,
    values: Vec<BigInt>,
    provenance: Vec<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    n: usize,
    value: String,
    provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    name: String,
    start: usize,
    entries: Vec<Entry>,
}

impl SequenceTable {
    pub fn new(name: impl Into<String>, start: usize) -> Self {
        SequenceTable {
            name: name.into(),
            start,
            values: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn from_values(name: impl Into<String>, start: usize, values: Vec<BigInt>, provenance: Provenance) -> Self {
        let provenance = vec![provenance; values.len()];
        SequenceTable {
            name: name.into(),
            start,
            values,
            provenance,
        }
    }

    /// Convenience for small literal tables.
    pub fn from_i64(name: impl Into<String>, start: usize, values: &[i64]) -> Self {
        Self::from_values(name, start, values.iter().map(|&v| BigInt::from(v)).collect(), Provenance::DirectSum)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Last index held, if any.
    pub fn last(&self) -> Option<usize> {
        (!self.values.is_empty()).then(|| self.start + self.values.len() - 1)
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    pub fn provenance(&self, n: usize) -> Option<Provenance> {
        n.checked_sub(self.start).and_then(|i| self.provenance.get(i).copied())
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn push(&mut self, value: BigInt, provenance: Provenance) {
        self.values.push(value);
        self.provenance.push(provenance);
    }

    /// Copy holding only indices `lo..=hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> Result<Self, SequenceError> {
        if !self.covers(lo, hi) || lo > hi {
            return Err(SequenceError::MissingIndex { name: self.name.clone(), index: if self.get(lo).is_none() { lo } else { hi } });
        }
        let (a, b) = (lo - self.start, hi - self.start + 1);
        Ok(SequenceTable {
            name: self.name.clone(),
            start: lo,
            values: self.values[a..b].to_vec(),
            provenance: self.provenance[a..b].to_vec(),
        })
    }

    /// Copy with one value replaced; used to inject faults in negative tests.
    pub fn with_value(&self, n: usize, value: BigInt) -> Result<Self, SequenceError> {
        let i = n
            .checked_sub(self.start)
            .filter(|&i| i < self.values.len())
            .ok_or_else(|| SequenceError::MissingIndex { name: self.name.clone(), index: n })?;
        let mut out = self.clone();
        out.values[i] = value;
        Ok(out)
    }

    /// First index whose value is zero or negative.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_positive()).map(|i| i + self.start)
    }

    /// First index at which two tables disagree over their common range.
    pub fn first_mismatch(&self, other: &SequenceTable) -> Option<usize> {
        let lo = self.start.max(other.start);
        let hi = self.last()?.min(other.last()?);
        (lo..=hi).find(|&n| self.get(n) != other.get(n))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (i, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{},{}", self.start + i, v);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            name: self.name.clone(),
            start: self.start,
            entries: self
                .values
                .iter()
                .zip(&self.provenance)
                .enumerate()
                .map(|(i, (v, p))| Entry { n: self.start + i, value: v.to_string(), provenance: *p })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, SequenceError> {
        let doc: TableDoc = serde_json::from_str(text).map_err(|e| SequenceError::Format(e.to_string()))?;
        let mut table = SequenceTable::new(doc.name, doc.start);
        for (i, e) in doc.entries.into_iter().enumerate() {
            if e.n != doc.start + i {
                return Err(SequenceError::Format(format!("index {} out of order", e.n)));
            }
            let v = e.value.parse().map_err(|_| SequenceError::Format(format!("bad integer {:?}", e.value)))?;
            table.push(v, e.provenance);
        }
        Ok(table)
    }
}

impl Terms for SequenceTable {
    fn label(&self) -> &str {
        &self.name
    }

    fn indices(&self) -> Option<RangeInclusive<usize>> {
        self.last().map(|l| self.start..=l)
    }

    fn term(&self, n: usize) -> Option<Rational> {
        self.get(n).map(Rational::from)
    }
}

/// Consecutive quotients `q_n = z_n / z_{n-1}` of a positive sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTable {
    base: String,
    label: String,
    start: usize,
    quotients: Vec<Rational>,
}

impl QuotientTable {
    pub fn from_sequence(table: &SequenceTable) -> Result<Self, SequenceError> {
        if let Some(n) = table.first_nonpositive() {
            return Err(SequenceError::NotPositive { name: table.name().to_string(), index: n });
        }
        let start = table.start() + 1;
        let quotients = table
            .values()
            .windows(2)
            .map(|w| Rational::new(w[1].clone(), w[0].clone()))
            .collect();
        Ok(QuotientTable {
            base: table.name().to_string(),
            label: format!("{}/{}", table.name(), table.name()),
            start,
            quotients,
        })
    }

    /// Quotient table from explicit rationals, first entry at index `start`.
    pub fn from_rationals(label: impl Into<String>, start: usize, quotients: Vec<Rational>) -> Self {
        let label = label.into();
        QuotientTable { base: label.clone(), label, start, quotients }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(self.start).and_then(|i| self.quotients.get(i))
    }

    pub fn last(&self) -> Option<usize> {
        (!self.quotients.is_empty()).then(|| self.start + self.quotients.len() - 1)
    }

    pub fn quotients(&self) -> &[Rational] {
        &self.quotients
    }
}

impl Terms for QuotientTable {
    fn label(&self) -> &str {
        &self.label
    }

    fn indices(&self) -> Option<RangeInclusive<usize>> {
        self.last().map(|l| self.start..=l)
    }

    fn term(&self, n: usize) -> Option<Rational> {
        self.get(n).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotients_of_small_tables() {
        let s = SequenceTable::from_i64("S", 0, &[1, 7, 55, 465]);
        let q = QuotientTable::from_sequence(&s).unwrap();
        assert_eq!(q.start(), 1);
        assert_eq!(q.get(1), Some(&Rational::from(7)));
        assert_eq!(q.get(2), Some(&Rational::new(55, 7)));
        assert_eq!(q.get(0), None);

        let ones = SequenceTable::from_i64("one", 0, &[3, 3, 3, 3]);
        let q = QuotientTable::from_sequence(&ones).unwrap();
        assert!(q.quotients().iter().all(Rational::is_one));
    }

    #[test]
    fn nonpositive_terms_rejected() {
        let t = SequenceTable::from_i64("z", 0, &[1, 0, 2]);
        assert!(matches!(QuotientTable::from_sequence(&t), Err(SequenceError::NotPositive { index: 1, .. })));
    }

    #[test]
    fn csv_and_json() {
        let t = SequenceTable::from_i64("S", 0, &[1, 7, 55]);
        assert_eq!(t.to_csv(), "n,value\n0,1\n1,7\n2,55\n");
        let json = t.to_json();
        assert!(json.contains("\"provenance\": \"direct_sum\""));
        assert_eq!(SequenceTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn slicing_and_faults() {
        let t = SequenceTable::from_i64("S", 0, &[1, 7, 55, 465]);
        let s = t.slice(1, 2).unwrap();
        assert_eq!(s.start(), 1);
        assert_eq!(s.values(), &[BigInt::from(7), BigInt::from(55)]);
        assert!(t.slice(2, 9).is_err());
        let bad = t.with_value(2, BigInt::from(56)).unwrap();
        assert_eq!(t.first_mismatch(&bad), Some(2));
        assert!(t.with_value(10, BigInt::from(1)).is_err());
    }
}
