//! Exact values of `S_n`, `f_n`, `u_n` and the recurrences they satisfy.

mod binomial;
mod recurrence;
mod sums;
mod table;

use std::str::FromStr;

pub use binomial::{binomial, BinomialCache};
pub use recurrence::RecurrenceRelation;
pub use sums::{
    check_guo_liu_identity, compute_f, compute_s, compute_u, f_table, f_table_with, sun_table, sun_table_with,
    u_table,
};
pub use table::{Provenance, QuotientTable, SequenceTable, Terms};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("{name}: index {index} not available")]
    MissingIndex { name: String, index: usize },
    #[error("{name}: value at index {index} is not an integer")]
    NotIntegral { name: String, index: usize },
    #[error("{name}: recurrence division not exact at index {index}")]
    NonExactDivision { name: String, index: usize },
    #[error("{name}: nonpositive value at index {index}")]
    NotPositive { name: String, index: usize },
    #[error("{name}: leading coefficient vanishes at n = {index}")]
    LeadingCoefficientVanishes { name: String, index: usize },
    #[error("{name}: index {index} below validity start {n_min}")]
    BelowValidity { name: String, index: usize, n_min: usize },
    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
    #[error("malformed table: {0}")]
    Format(String),
}

impl SequenceError {
    /// The sequence index the error refers to, when there is one.
    pub fn index(&self) -> Option<usize> {
        match self {
            SequenceError::MissingIndex { index, .. }
            | SequenceError::NotIntegral { index, .. }
            | SequenceError::NonExactDivision { index, .. }
            | SequenceError::NotPositive { index, .. }
            | SequenceError::LeadingCoefficientVanishes { index, .. }
            | SequenceError::BelowValidity { index, .. } => Some(*index),
            _ => None,
        }
    }
}

/// The three integer sequences the tool knows how to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceName {
    S,
    F,
    U,
}

impl SequenceName {
    pub fn first_index(self) -> usize {
        match self {
            SequenceName::U => 1,
            _ => 0,
        }
    }

    /// Table covering `first_index ..= upto`.
    pub fn table(self, upto: usize) -> Result<SequenceTable, SequenceError> {
        match self {
            SequenceName::S => Ok(sun_table(upto)),
            SequenceName::F => f_table(upto),
            SequenceName::U => Ok(u_table(&sun_table(upto))),
        }
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" => Ok(SequenceName::S),
            "f" | "F" => Ok(SequenceName::F),
            "u" | "U" => Ok(SequenceName::U),
            other => Err(format!("unknown sequence {other:?} (expected S, f or u)")),
        }
    }
}
