use serde::{Deserialize, Serialize};

use super::CheckError;
use crate::exact::{sign_for_all_n_geq, Rational, RationalFunction, Sign, Strictness};

/// A rational function used as a bound, defined for integers `n >= valid_from`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundFunction {
    pub expr: RationalFunction,
    pub valid_from: i64,
}

impl BoundFunction {
    /// Fails if the denominator vanishes at some integer `n >= valid_from`.
    pub fn new(expr: RationalFunction, valid_from: i64) -> Result<Self, CheckError> {
        let den_sq = expr.denominator().pow(2);
        let cert = sign_for_all_n_geq(&den_sq, valid_from, Strictness::Strict)?;
        if !cert.establishes(Sign::Positive, Strictness::Strict) {
            return Err(CheckError::BoundUndefined { index: cert.witness().unwrap_or(valid_from) });
        }
        Ok(BoundFunction { expr, valid_from })
    }

    pub fn eval(&self, n: i64) -> Result<Rational, CheckError> {
        if n < self.valid_from {
            return Err(CheckError::BoundUndefined { index: n });
        }
        self.expr.eval_int(n).ok_or(CheckError::BoundUndefined { index: n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Polynomial;

    #[test]
    fn rejects_poles_in_range() {
        let h = crate::sun::h();
        assert!(BoundFunction::new(h.clone(), 1).is_ok());
        assert_eq!(BoundFunction::new(h.clone(), 0).unwrap_err(), CheckError::BoundUndefined { index: 0 });
        let b = BoundFunction::new(h, 1).unwrap();
        assert_eq!(b.eval(1).unwrap(), Rational::new(9, 2));
        assert!(b.eval(0).is_err());

        let pole_at_5 = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[-5, 1])).unwrap();
        assert_eq!(BoundFunction::new(pole_at_5, 2).unwrap_err(), CheckError::BoundUndefined { index: 5 });
    }
}
