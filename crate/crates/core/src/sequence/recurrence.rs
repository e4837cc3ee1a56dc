use num_traits::Signed;
use serde::Serialize;

use super::table::{Provenance, SequenceTable, Terms};
use super::SequenceError;
use crate::exact::{Polynomial, Rational};

/// `sum_{i=0..r} c_i(n) z_{n+i} = 0`, asserted for `n >= n_min`.
///
/// `label_offset` maps the base index `n` to the index under which the
/// relation is usually displayed (e.g. a three-term relation written around
/// `z_n` is stored with base `n - 1` and offset 1).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceRelation {
    name: String,
    coeffs: Vec<Polynomial>,
    n_min: usize,
    label_offset: i64,
}

impl RecurrenceRelation {
    pub fn new(name: impl Into<String>, coeffs: Vec<Polynomial>, n_min: usize) -> Result<Self, SequenceError> {
        let name = name.into();
        if coeffs.len() < 2 {
            return Err(SequenceError::InvalidRecurrence(format!("{name}: order must be at least 1")));
        }
        if coeffs.last().unwrap().is_zero() {
            return Err(SequenceError::InvalidRecurrence(format!("{name}: leading coefficient is zero")));
        }
        Ok(RecurrenceRelation { name, coeffs, n_min, label_offset: 0 })
    }

    pub fn with_label_offset(mut self, offset: i64) -> Self {
        self.label_offset = offset;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn n_min(&self) -> usize {
        self.n_min
    }

    /// Display index for base index `n`.
    pub fn label(&self, n: usize) -> i64 {
        n as i64 + self.label_offset
    }

    /// Base index for a display index.
    pub fn base_index(&self, label: i64) -> Option<usize> {
        usize::try_from(label - self.label_offset).ok()
    }

    /// Exact value of `sum_i c_i(n) z_{n+i}`.
    pub fn residual<T: Terms + ?Sized>(&self, table: &T, n: usize) -> Result<Rational, SequenceError> {
        if n < self.n_min {
            return Err(SequenceError::BelowValidity { name: self.name.clone(), index: n, n_min: self.n_min });
        }
        let at = Rational::from(n as u64);
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let z = table
                .term(n + i)
                .ok_or_else(|| SequenceError::MissingIndex { name: table.label().to_string(), index: n + i })?;
            acc += c.eval(&at) * z;
        }
        Ok(acc)
    }

    /// Smallest base index in `lo..=hi` with a nonzero residual.
    pub fn first_failure<T: Terms + ?Sized>(&self, table: &T, lo: usize, hi: usize) -> Result<Option<usize>, SequenceError> {
        for n in lo..=hi {
            if !self.residual(table, n)?.is_zero() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Unrolls the recurrence forward from the last `order` values of
    /// `initials` until index `upto`. New entries are tagged `Recurrence`.
    pub fn extend(&self, initials: &SequenceTable, upto: usize) -> Result<SequenceTable, SequenceError> {
        let r = self.order();
        let last = initials
            .last()
            .ok_or_else(|| SequenceError::MissingIndex { name: initials.name().to_string(), index: initials.start() })?;
        if upto <= last {
            return Ok(initials.clone());
        }
        if initials.len() < r || last + 1 - r < self.n_min {
            return Err(SequenceError::InvalidRecurrence(format!(
                "{}: need {r} initial values at or after index {}",
                self.name, self.n_min
            )));
        }
        let mut table = initials.clone();
        for m in last + 1..=upto {
            let base = m - r;
            let at = Rational::from(base as u64);
            let lead = self.coeffs[r].eval(&at);
            if lead.is_zero() {
                return Err(SequenceError::LeadingCoefficientVanishes { name: self.name.clone(), index: base });
            }
            let mut partial = Rational::zero();
            for i in 0..r {
                partial += self.coeffs[i].eval(&at) * Rational::from(table.get(base + i).unwrap());
            }
            let next = -partial / lead;
            let value = next
                .to_integer()
                .ok_or_else(|| SequenceError::NonExactDivision { name: table.name().to_string(), index: m })?;
            if !value.is_positive() {
                return Err(SequenceError::NotPositive { name: table.name().to_string(), index: m });
            }
            table.push(value, Provenance::Recurrence);
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn fib_rec() -> RecurrenceRelation {
        let one = Polynomial::from_ints(&[1]);
        let neg = Polynomial::from_ints(&[-1]);
        RecurrenceRelation::new("fib", vec![neg.clone(), neg, one], 0).unwrap()
    }

    #[test]
    fn rejects_degenerate_relations() {
        assert!(RecurrenceRelation::new("x", vec![Polynomial::one()], 0).is_err());
        assert!(RecurrenceRelation::new("x", vec![Polynomial::one(), Polynomial::zero()], 0).is_err());
    }

    #[test]
    fn extend_and_residual() {
        let rec = fib_rec();
        let init = SequenceTable::from_i64("F", 0, &[1, 1]);
        let t = rec.extend(&init, 8).unwrap();
        assert_eq!(t.get(8), Some(&BigInt::from(34)));
        assert_eq!(t.provenance(8), Some(Provenance::Recurrence));
        assert_eq!(t.provenance(0), Some(Provenance::DirectSum));
        assert!(rec.residual(&t, 6).unwrap().is_zero());
        assert!(matches!(rec.residual(&t, 7), Err(SequenceError::MissingIndex { index: 9, .. })));
        assert_eq!(rec.first_failure(&t, 0, 6).unwrap(), None);
    }

    #[test]
    fn extend_below_range_is_identity() {
        let rec = fib_rec();
        let init = SequenceTable::from_i64("F", 0, &[1, 1, 2, 3]);
        assert_eq!(rec.extend(&init, 2).unwrap(), init);
    }

    #[test]
    fn nonpositive_and_inexact_values_surface() {
        // z_{n+1} = z_n - 2 z_{n-1}: 1, 1, -1
        let rec = RecurrenceRelation::new(
            "dip",
            vec![Polynomial::from_ints(&[2]), Polynomial::from_ints(&[-1]), Polynomial::from_ints(&[1])],
            0,
        )
        .unwrap();
        let init = SequenceTable::from_i64("z", 0, &[1, 1]);
        assert!(matches!(rec.extend(&init, 3), Err(SequenceError::NotPositive { index: 2, .. })));

        // 2 z_{n+1} = z_n
        let halve = RecurrenceRelation::new("half", vec![Polynomial::from_ints(&[-1]), Polynomial::from_ints(&[2])], 0).unwrap();
        let init = SequenceTable::from_i64("z", 0, &[2]);
        assert!(matches!(halve.extend(&init, 3), Err(SequenceError::NonExactDivision { index: 2, .. })));
    }
}
