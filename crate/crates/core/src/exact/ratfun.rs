use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{ExactError, Polynomial, Rational};

/// Quotient of two polynomials in lowest terms.
///
/// Normal form: numerator and denominator coprime, denominator monic. Two
/// equal functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Deserialize)]
struct RawRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRationalFunction::deserialize(deserializer)?;
        RationalFunction::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Polynomial::zero()));
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g)?;
        let (mut den, _) = den.div_rem(&g)?;
        let lc = den.leading_coefficient().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.checked_recip()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_int(&self, n: i64) -> Option<Rational> {
        self.eval(&Rational::from(n))
    }

    /// `F(n + shift)`.
    pub fn compose_shift(&self, shift: i64) -> Self {
        Self::new(self.num.shift(shift), self.den.shift(shift)).expect("shift keeps denominator nonzero")
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.num.scale(k), self.den.clone()).expect("denominator unchanged")
    }

    /// Polynomial whose sign equals the sign of this function wherever the
    /// denominator is nonzero, and which vanishes where it is zero.
    pub fn sign_polynomial(&self) -> Polynomial {
        &self.num * &self.den
    }

    /// Limit as `n -> +infinity`, when finite.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(a), Some(b)) if a < b => Some(Rational::zero()),
            (Some(a), Some(b)) if a == b => Some(
                self.num.leading_coefficient().unwrap() / self.den.leading_coefficient().unwrap(),
            ),
            _ => None,
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn cancels_common_factors() {
        // (n^2 - 1) / (2n + 2) = (n - 1) / 2
        let f = rf(&[-1, 0, 1], &[2, 2]);
        assert_eq!(f.denominator(), &Polynomial::one());
        assert_eq!(f.numerator(), &Polynomial::new(vec![Rational::new(-1, 2), Rational::new(1, 2)]));
    }

    #[test]
    fn self_difference_is_zero() {
        let f = rf(&[3, 1], &[0, 0, -7]);
        assert!((&f - &f).is_zero());
        assert_eq!(&f - &f, RationalFunction::zero());
    }

    #[test]
    fn division_by_zero_function() {
        let f = rf(&[1], &[0, 1]);
        assert_eq!(f.checked_div(&RationalFunction::zero()), Err(ExactError::DivisionByZero));
        assert!(RationalFunction::new(p(&[1]), Polynomial::zero()).is_err());
    }

    #[test]
    fn denominator_is_monic_and_positive() {
        let f = rf(&[1], &[0, -3]);
        assert!(f.denominator().leading_coefficient().unwrap().is_one());
        assert_eq!(f.eval_int(1), Some(Rational::new(-1, 3)));
        assert_eq!(f.eval_int(0), None);
    }

    #[test]
    fn limits() {
        assert_eq!(rf(&[1, 10], &[3, 1]).limit_at_infinity(), Some(Rational::from(10)));
        assert_eq!(rf(&[1], &[3, 1]).limit_at_infinity(), Some(Rational::zero()));
        assert_eq!(rf(&[0, 0, 1], &[3, 1]).limit_at_infinity(), None);
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-9i64..9, 0..4),
            prop::collection::vec(-9i64..9, 1..4).prop_filter("nonzero", |d| d.iter().any(|&c| c != 0)),
        )
            .prop_map(|(n, d)| rf(&n, &d))
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(f in small_rf()) {
            let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &f);
            prop_assert!(f.denominator().leading_coefficient().unwrap().is_positive());
        }

        #[test]
        fn arithmetic_agrees_pointwise(f in small_rf(), g in small_rf(), n in -6i64..6) {
            if let (Some(a), Some(b)) = (f.eval_int(n), g.eval_int(n)) {
                if let Some(s) = (&f + &g).eval_int(n) {
                    prop_assert_eq!(s, &a + &b);
                }
                if let Some(m) = (&f * &g).eval_int(n) {
                    prop_assert_eq!(m, &a * &b);
                }
            }
        }
    }
}
