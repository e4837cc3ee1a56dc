use super::{first_violation, require_positive, CheckError, CriterionReport, SubVerdict, Verdict};
use crate::exact::Strictness;
use crate::sequence::Terms;

#[derive(Clone, Copy)]
enum Shape {
    Convex,
    Concave,
}

fn check_shape<T: Terms + Sync + ?Sized>(
    values: &T,
    shape: Shape,
    strictness: Strictness,
    lo: usize,
    hi: usize,
) -> Result<CriterionReport, CheckError> {
    if lo == 0 {
        return Err(CheckError::InvalidArgument("log-convexity needs n >= 1".into()));
    }
    if lo > hi {
        return Err(CheckError::InvalidArgument(format!("empty range {lo}..={hi}")));
    }
    require_positive(values, lo - 1, hi + 1)?;
    let verdict = first_violation(lo as i64, hi as i64, |n| {
        let n = n as usize;
        let outer = values.term(n - 1).unwrap() * values.term(n + 1).unwrap();
        let mid = values.term(n).unwrap().pow(2);
        let ok = match (shape, strictness) {
            (Shape::Convex, Strictness::Strict) => outer > mid,
            (Shape::Convex, Strictness::Weak) => outer >= mid,
            (Shape::Concave, Strictness::Strict) => outer < mid,
            (Shape::Concave, Strictness::Weak) => outer <= mid,
        };
        (!ok).then(|| Verdict::fail(n, outer, mid))
    });
    let (name, cmp) = match (shape, strictness) {
        (Shape::Convex, Strictness::Strict) => ("log-convex", ">"),
        (Shape::Convex, Strictness::Weak) => ("log-convex", ">="),
        (Shape::Concave, Strictness::Strict) => ("log-concave", "<"),
        (Shape::Concave, Strictness::Weak) => ("log-concave", "<="),
    };
    let label = values.label();
    let detail = SubVerdict::new(format!("{label}_(n-1) {label}_(n+1) {cmp} {label}_n^2"), verdict).over(lo, hi);
    Ok(CriterionReport::from_details(
        format!("{name}({label})"),
        (lo as i64, hi as i64),
        strictness,
        vec![detail],
    ))
}

/// `z_{n-1} z_{n+1} > z_n^2` (or `>=` when weak) for `lo <= n <= hi`.
pub fn check_log_convex_range<T: Terms + Sync + ?Sized>(
    values: &T,
    strictness: Strictness,
    lo: usize,
    hi: usize,
) -> Result<CriterionReport, CheckError> {
    check_shape(values, Shape::Convex, strictness, lo, hi)
}

/// `z_{n-1} z_{n+1} < z_n^2` (or `<=` when weak) for `lo <= n <= hi`.
pub fn check_log_concave_range<T: Terms + Sync + ?Sized>(
    values: &T,
    strictness: Strictness,
    lo: usize,
    hi: usize,
) -> Result<CriterionReport, CheckError> {
    check_shape(values, Shape::Concave, strictness, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::sequence::{sun_table, QuotientTable, SequenceTable};

    #[test]
    fn sun_numbers_are_log_convex() {
        let s = sun_table(60);
        let r = check_log_convex_range(&s, Strictness::Strict, 1, 59).unwrap();
        assert!(r.verdict.is_pass());
        let r = check_log_concave_range(&s, Strictness::Weak, 1, 59).unwrap();
        assert_eq!(r.verdict.witness(), Some(1));
    }

    #[test]
    fn factorials_and_failure_payload() {
        let fact = SequenceTable::from_i64("n!", 0, &[1, 1, 2, 6, 24, 120]);
        assert!(check_log_convex_range(&fact, Strictness::Strict, 1, 4).unwrap().verdict.is_pass());
        let r = check_log_concave_range(&fact, Strictness::Strict, 1, 3).unwrap();
        match r.verdict {
            Verdict::Fail { witness, lhs, rhs } => {
                assert_eq!(witness, 1);
                assert_eq!((lhs, rhs), (Rational::from(2), Rational::from(1)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn geometric_sequence_is_only_weakly_log_convex() {
        let g = SequenceTable::from_i64("3^n", 0, &[1, 3, 9, 27, 81]);
        assert!(check_log_convex_range(&g, Strictness::Weak, 1, 3).unwrap().verdict.is_pass());
        assert_eq!(check_log_convex_range(&g, Strictness::Strict, 1, 3).unwrap().verdict.witness(), Some(1));
    }

    #[test]
    fn rejects_missing_and_nonpositive_terms() {
        let s = sun_table(10);
        assert!(matches!(
            check_log_convex_range(&s, Strictness::Strict, 1, 10),
            Err(CheckError::MissingRange { hi: 11, .. })
        ));
        let bad = SequenceTable::from_i64("z", 0, &[1, 2, 0, 5]);
        assert!(matches!(
            check_log_convex_range(&bad, Strictness::Strict, 1, 2),
            Err(CheckError::NotPositive { index: 2, .. })
        ));
    }

    #[test]
    fn quotients_of_sun_numbers_are_log_concave() {
        let q = QuotientTable::from_sequence(&sun_table(40)).unwrap();
        assert!(check_log_concave_range(&q, Strictness::Strict, 2, 39).unwrap().verdict.is_pass());
    }
}
