//! Exact computation of Sun's numbers `S_n` and machine certification of
//! their log-behavior: log-convexity, interlacing bounds, ratio
//! log-concavity, n-th root monotonicity and limits.

pub mod certify;
pub mod exact;
pub mod logbehavior;
pub mod sequence;
pub mod sun;

pub use exact::{Polynomial, Rational, RationalFunction, SignCertificate, Strictness};
pub use logbehavior::{BoundFunction, CheckError, CriterionReport, SubVerdict, Verdict};
pub use sequence::{QuotientTable, RecurrenceRelation, SequenceTable, Terms};
pub use certify::{run_claims, CertificationReport, CertifyConfig, ClaimId, Format, Outcome};
