//! Eventual-sign certificates for polynomial inequalities over integer tails.
//!
//! Every root of `a_d n^d + ... + a_0` has modulus below `1 + max |a_i / a_d|`
//! (Cauchy). Past that bound the polynomial has the sign of `a_d`; below it
//! every integer from the threshold on is evaluated exactly.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{ExactError, Polynomial, Rational};

/// Largest scan window accepted before giving up.
pub const MAX_SCAN: i64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strictness {
    Strict,
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignVerdict {
    AllPositive,
    AllNonnegative,
    AllNegative,
    AllNonpositive,
    Fails { witness: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    LeadingCoefficientTail,
    ExhaustiveScan,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignCertificate {
    pub polynomial: Polynomial,
    pub threshold: i64,
    pub verdict: SignVerdict,
    pub scan_bound: i64,
    pub justification: Justification,
}

impl SignCertificate {
    /// True when the certificate shows `sign(P(n))` is `sign` (or zero, if
    /// weak) for every integer `n >= threshold`.
    pub fn establishes(&self, sign: Sign, strictness: Strictness) -> bool {
        use SignVerdict::*;
        matches!(
            (&self.verdict, sign, strictness),
            (AllPositive, Sign::Positive, _)
                | (AllNonnegative, Sign::Positive, Strictness::Weak)
                | (AllNegative, Sign::Negative, _)
                | (AllNonpositive, Sign::Negative, Strictness::Weak)
        )
    }

    pub fn witness(&self) -> Option<i64> {
        match self.verdict {
            SignVerdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Smallest `N0 >= 0` with `sign(P(n)) = sign(lc)` for every integer `n >= N0`.
pub fn eventual_sign_bound(p: &Polynomial) -> Result<i64, ExactError> {
    let degree = p.degree().ok_or(ExactError::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(0);
    }
    let lc = p.leading_coefficient().unwrap().abs();
    let max_ratio = p.coeffs()[..degree]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound: BigInt = (max_ratio + Rational::one()).ceil();
    bound.to_i64().ok_or(ExactError::BoundTooLarge)
}

/// Certifies the sign of `P(n)` for all integers `n >= threshold`.
///
/// The blanket verdict follows the leading coefficient; any integer in the
/// scanned window that disagrees yields `Fails` with the smallest such `n`.
pub fn sign_for_all_n_geq(
    p: &Polynomial,
    threshold: i64,
    strictness: Strictness,
) -> Result<SignCertificate, ExactError> {
    let bound = eventual_sign_bound(p)?;
    let scan_bound = threshold.max(bound);
    if scan_bound - threshold > MAX_SCAN {
        return Err(ExactError::BoundTooLarge);
    }
    let leading_sign = p.leading_coefficient().unwrap().signum();
    let ints = p.integer_multiple();
    let witness = (threshold..=scan_bound).find(|&n| {
        let s = Polynomial::sign_at(&ints, n);
        match strictness {
            Strictness::Strict => s != leading_sign,
            Strictness::Weak => s == -leading_sign,
        }
    });
    let (verdict, justification) = match witness {
        Some(witness) => (SignVerdict::Fails { witness }, Justification::ExhaustiveScan),
        None => {
            let v = match (leading_sign > 0, strictness) {
                (true, Strictness::Strict) => SignVerdict::AllPositive,
                (true, Strictness::Weak) => SignVerdict::AllNonnegative,
                (false, Strictness::Strict) => SignVerdict::AllNegative,
                (false, Strictness::Weak) => SignVerdict::AllNonpositive,
            };
            (v, Justification::LeadingCoefficientTail)
        }
    };
    Ok(SignCertificate {
        polynomial: p.clone(),
        threshold,
        verdict,
        scan_bound,
        justification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn cauchy_bounds() {
        assert_eq!(eventual_sign_bound(&p(&[-5, 1])).unwrap(), 6);
        assert_eq!(eventual_sign_bound(&p(&[15, -40, -88])).unwrap(), 2);
        assert!(eventual_sign_bound(&p(&[-171, -1626, -918, 1464, 1152])).unwrap() <= 3);
        assert_eq!(eventual_sign_bound(&p(&[4])).unwrap(), 0);
        assert_eq!(eventual_sign_bound(&Polynomial::zero()), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn tail_certificates() {
        let cert = sign_for_all_n_geq(&p(&[15, -40, -88]), 1, Strictness::Strict).unwrap();
        assert_eq!(cert.verdict, SignVerdict::AllNegative);
        assert!(cert.establishes(Sign::Negative, Strictness::Strict));
        assert!(cert.scan_bound >= 2);

        let q = p(&[-171, -1626, -918, 1464, 1152]);
        let at1 = sign_for_all_n_geq(&q, 1, Strictness::Strict).unwrap();
        assert_eq!(at1.verdict, SignVerdict::Fails { witness: 1 });
        assert_eq!(at1.justification, Justification::ExhaustiveScan);
        let at2 = sign_for_all_n_geq(&q, 2, Strictness::Strict).unwrap();
        assert_eq!(at2.verdict, SignVerdict::AllPositive);
        assert_eq!(at2.justification, Justification::LeadingCoefficientTail);
    }

    #[test]
    fn weak_accepts_roots_strict_does_not() {
        // (n - 3)^2 touches zero at n = 3
        let sq = p(&[9, -6, 1]);
        assert_eq!(sign_for_all_n_geq(&sq, 0, Strictness::Weak).unwrap().verdict, SignVerdict::AllNonnegative);
        assert_eq!(
            sign_for_all_n_geq(&sq, 0, Strictness::Strict).unwrap().verdict,
            SignVerdict::Fails { witness: 3 }
        );
    }

    #[test]
    fn rational_coefficients() {
        // n/2 - 7/3 > 0 from n = 5
        let q = Polynomial::new(vec![Rational::new(-7, 3), Rational::new(1, 2)]);
        assert_eq!(sign_for_all_n_geq(&q, 0, Strictness::Strict).unwrap().witness(), Some(0));
        assert_eq!(sign_for_all_n_geq(&q, 5, Strictness::Strict).unwrap().verdict, SignVerdict::AllPositive);
    }

    proptest! {
        #[test]
        fn blanket_verdicts_are_sound(coeffs in prop::collection::vec(-60i64..60, 1..6), start in -20i64..20) {
            let poly = p(&coeffs);
            prop_assume!(!poly.is_zero());
            let cert = sign_for_all_n_geq(&poly, start, Strictness::Strict).unwrap();
            if let Some(w) = cert.witness() {
                prop_assert!(w >= start);
                for n in start..w {
                    prop_assert_eq!(poly.eval_int(n).signum(), poly.leading_coefficient().unwrap().signum());
                }
            } else {
                let sign = poly.leading_coefficient().unwrap().signum();
                for n in (start..start + 10_000).step_by(37) {
                    prop_assert_eq!(poly.eval_int(n).signum(), sign);
                }
            }
        }
    }
}
