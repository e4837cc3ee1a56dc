//! Direct summation for `S_n`, `f_n` and `u_n = 4 n S_n`.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use super::binomial::{binomial, BinomialCache};
use super::table::{Provenance, SequenceTable};
use super::SequenceError;
use crate::exact::Rational;

/// `S_n = sum_k C(n,k)^2 C(2k,k) (2k+1)`.
pub fn compute_s(n: u64) -> BigInt {
    let total: BigUint = (0..=n)
        .map(|k| {
            let c = binomial(n, k as i64);
            &c * &c * binomial(2 * k, k as i64) * (2 * k + 1)
        })
        .sum();
    BigInt::from(total)
}

/// `f_n = sum_k C(2k,k)/(k+1) (6k C(n,k)^2 + C(n,k) C(n,k+1))`, summed over
/// the rationals and checked to be an integer.
pub fn compute_f(n: u64) -> Result<BigInt, SequenceError> {
    let total: Rational = (0..=n)
        .map(|k| {
            let cnk = BigInt::from(binomial(n, k as i64));
            let inner = BigInt::from(6 * k) * &cnk * &cnk + &cnk * BigInt::from(binomial(n, k as i64 + 1));
            Rational::new(BigInt::from(binomial(2 * k, k as i64)) * inner, BigInt::from(k + 1))
        })
        .sum();
    total.to_integer().ok_or(SequenceError::NotIntegral { name: "f".into(), index: n as usize })
}

pub fn compute_u(n: u64) -> BigInt {
    BigInt::from(4 * n) * compute_s(n)
}

/// `4 n S_n = (n+1)^2 f_n - n^2 f_{n-1}`; at `n = 0` both sides reduce to `0 = f_0`.
pub fn check_guo_liu_identity(n: u64) -> Result<bool, SequenceError> {
    let lhs = BigInt::from(4 * n) * compute_s(n);
    let f_n = compute_f(n)?;
    let rhs = if n == 0 {
        f_n
    } else {
        BigInt::from((n + 1) * (n + 1)) * f_n - BigInt::from(n * n) * compute_f(n - 1)?
    };
    Ok(lhs == rhs)
}

fn s_from_cache(cache: &BinomialCache, n: usize) -> BigInt {
    let row = cache.row(n);
    let total: BigUint = row
        .iter()
        .enumerate()
        .map(|(k, c)| c * c * cache.central(k) * (2 * k as u64 + 1))
        .sum();
    BigInt::from(total)
}

fn f_from_cache(cache: &BinomialCache, n: usize) -> Result<BigInt, SequenceError> {
    let row = cache.row(n);
    let total: Rational = (0..=n)
        .map(|k| {
            let cnk = BigInt::from(row[k].clone());
            let next = BigInt::from(cache.get(n, k as i64 + 1));
            let inner = BigInt::from(6 * k as u64) * &cnk * &cnk + &cnk * next;
            Rational::new(BigInt::from(cache.central(k).clone()) * inner, BigInt::from(k as u64 + 1))
        })
        .sum();
    total.to_integer().ok_or(SequenceError::NotIntegral { name: "f".into(), index: n })
}

/// `S_0 ..= S_upto` by direct summation.
pub fn sun_table(upto: usize) -> SequenceTable {
    let cache = BinomialCache::new(upto);
    sun_table_with(&cache, upto)
}

pub fn sun_table_with(cache: &BinomialCache, upto: usize) -> SequenceTable {
    let values: Vec<BigInt> = (0..=upto).into_par_iter().map(|n| s_from_cache(cache, n)).collect();
    SequenceTable::from_values("S", 0, values, Provenance::DirectSum)
}

/// `f_0 ..= f_upto` by direct summation.
pub fn f_table(upto: usize) -> Result<SequenceTable, SequenceError> {
    let cache = BinomialCache::new(upto);
    f_table_with(&cache, upto)
}

pub fn f_table_with(cache: &BinomialCache, upto: usize) -> Result<SequenceTable, SequenceError> {
    let values = (0..=upto)
        .into_par_iter()
        .map(|n| f_from_cache(cache, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SequenceTable::from_values("f", 0, values, Provenance::DirectSum))
}

/// `u_n = 4 n S_n` from index 1, carrying the provenance of `S`.
pub fn u_table(s: &SequenceTable) -> SequenceTable {
    let mut u = SequenceTable::new("u", 1);
    if let Some(last) = s.last() {
        for n in s.start().max(1)..=last {
            let value = BigInt::from(4 * n as u64) * s.get(n).unwrap();
            u.push(value, s.provenance(n).unwrap());
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_anchor_values() {
        let expected = [1, 7, 55, 465, 4047, 35673];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(compute_s(n as u64), BigInt::from(v), "S_{n}");
        }
        // S_3 by hand: 1 + 54 + 270 + 140
        assert_eq!(compute_s(3), BigInt::from(1 + 54 + 270 + 140));
    }

    #[test]
    fn f_anchor_values() {
        assert_eq!(compute_f(0).unwrap(), BigInt::from(0));
        assert_eq!(compute_f(1).unwrap(), BigInt::from(7));
        assert_eq!(compute_f(2).unwrap(), BigInt::from(2 + 26 + 24));
    }

    #[test]
    fn guo_liu_small() {
        for n in 0..=12 {
            assert!(check_guo_liu_identity(n).unwrap(), "n = {n}");
        }
        // n = 1: 28 = 4*7 - 1*0; n = 2: 440 = 9*52 - 4*7
        assert_eq!(compute_u(1), BigInt::from(4 * 7));
        assert_eq!(compute_u(2), BigInt::from(9 * 52 - 4 * 7));
    }

    #[test]
    fn cached_tables_match_direct() {
        let s = sun_table(30);
        let f = f_table(30).unwrap();
        for n in 0..=30u64 {
            assert_eq!(s.get(n as usize).unwrap(), &compute_s(n));
            assert_eq!(f.get(n as usize).unwrap(), &compute_f(n).unwrap());
        }
        let u = u_table(&s);
        assert_eq!(u.start(), 1);
        assert_eq!(u.get(3).unwrap(), &BigInt::from(12 * 465));
    }
}
