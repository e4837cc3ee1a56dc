//! Rigorous enclosures of natural logarithms of positive integers.
//!
//! Values are fixed-point dyadics `k / 2^bits` with integer `k`. For
//! `x = 2^e m`, `1 <= m < 2`, we use `ln x = e ln 2 + 2 atanh((x - 2^e) / (x + 2^e))`
//! and `ln 2 = 2 atanh(1/3)`; both atanh arguments lie in `[0, 1/3]`, so the
//! series loses more than three bits per term.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// Guard bits carried below the requested precision during series summation.
const GUARD_BITS: u32 = 64;

/// Closed interval `[lo, hi] / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

impl Enclosure {
    pub fn point(value: &BigInt, bits: u32) -> Self {
        let v = value << bits;
        Enclosure { lo: v.clone(), hi: v, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lo(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.bits)
    }

    pub fn hi(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.bits)
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, BigInt::one() << self.bits)
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo() <= x && x <= &self.hi()
    }

    fn check_bits(&self, other: &Enclosure) {
        assert_eq!(self.bits, other.bits, "enclosures at different precisions");
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        self.check_bits(other);
        Enclosure { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, bits: self.bits }
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        self.check_bits(other);
        Enclosure { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, bits: self.bits }
    }

    pub fn mul_int(&self, k: i64) -> Enclosure {
        let (lo, hi) = (&self.lo * k, &self.hi * k);
        if k >= 0 {
            Enclosure { lo, hi, bits: self.bits }
        } else {
            Enclosure { lo: hi, hi: lo, bits: self.bits }
        }
    }

    /// Outward-rounded division by a positive integer.
    pub fn div_int(&self, k: u64) -> Enclosure {
        assert!(k > 0, "division by zero");
        let k = BigInt::from(k);
        Enclosure { lo: self.lo.div_floor(&k), hi: div_ceil(&self.hi, &k), bits: self.bits }
    }

    /// Rounds outward to `bits` (which must not exceed the current precision).
    pub fn round_to(&self, bits: u32) -> Enclosure {
        assert!(bits <= self.bits);
        let shift = BigInt::one() << (self.bits - bits);
        Enclosure { lo: self.lo.div_floor(&shift), hi: div_ceil(&self.hi, &shift), bits }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo().to_decimal(12), self.hi().to_decimal(12))
    }
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Bounds on `atanh(p/q) * 2^w` for `0 <= p/q <= 1/3`, as integers.
fn atanh_scaled(p: &BigInt, q: &BigInt, w: u32) -> (BigInt, BigInt) {
    debug_assert!(!p.is_negative() && q.is_positive() && BigInt::from(3) * p <= *q);
    if p.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let one = BigInt::one() << w;
    // Truncated y and y^2 never exceed the true values, so every partial
    // term below is a lower bound for the exact one.
    let y = (p << w).div_floor(q);
    let y2 = ((p * p) << w).div_floor(&(q * q));
    let mut term = y;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !term.is_zero() {
        sum += term.div_floor(&BigInt::from(2 * k + 1));
        term = (&term * &y2).div_floor(&one);
        k += 1;
    }
    // The k-th computed power is short by at most 2k+1 ulps, so each
    // summand is off by at most two ulps. The dropped tail starts below
    // 2k+1 ulps and shrinks by 1/9 per term.
    let slack = BigInt::from(5 * k + 6);
    let hi = &sum + slack;
    (sum, hi)
}

/// `ln 2` at `w` fractional bits.
fn ln2_scaled(w: u32) -> (BigInt, BigInt) {
    let (lo, hi) = atanh_scaled(&BigInt::one(), &BigInt::from(3), w);
    (lo * 2, hi * 2)
}

/// Enclosure of `ln x` with `bits` fractional bits. `x` must be positive.
pub fn ln_enclosure(x: &BigUint, bits: u32) -> Enclosure {
    assert!(!x.is_zero(), "ln of zero");
    let w = bits + GUARD_BITS;
    let e = x.bits() - 1;
    let x = BigInt::from(x.clone());
    let pow = BigInt::one() << e;
    let (a_lo, a_hi) = atanh_scaled(&(&x - &pow), &(&x + &pow), w);
    let (l2_lo, l2_hi) = ln2_scaled(w);
    let e = BigInt::from(e);
    let wide = Enclosure { lo: &e * l2_lo + a_lo * 2, hi: &e * l2_hi + a_hi * 2, bits: w };
    wide.round_to(bits)
}

/// Doubling precision schedule from `start` up to `max` bits.
pub fn precision_schedule(start: u32, max: u32) -> Vec<u32> {
    let max = max.max(1);
    let mut bits = start.clamp(1, max);
    let mut out = vec![bits];
    while bits < max {
        bits = (bits * 2).min(max);
        out.push(bits);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ln_f64(x: u64, bits: u32) -> Enclosure {
        ln_enclosure(&BigUint::from(x), bits)
    }

    #[test]
    fn encloses_known_logarithms() {
        for &(x, val) in &[(2u64, std::f64::consts::LN_2), (10, std::f64::consts::LN_10), (7, 7f64.ln())] {
            let e = ln_f64(x, 80);
            assert!(e.lo().to_f64() <= val + 1e-15 && val - 1e-15 <= e.hi().to_f64());
            assert!(e.width() < Rational::new(1, 1u64 << 60));
        }
        assert_eq!(ln_f64(1, 64).lo(), Rational::zero());
    }

    #[test]
    fn ln2_is_tight() {
        // 0.693147180559945309417232121458176568...
        let e = ln_f64(2, 120);
        let lo = Rational::new(693147180559945309417232121458u128, 1_000_000_000_000_000_000_000_000_000_000u128);
        let hi = Rational::new(693147180559945309417232121459u128, 1_000_000_000_000_000_000_000_000_000_000u128);
        assert!(e.lo() < hi && lo < e.hi());
        assert!(e.width() < Rational::new(1, 1u128 << 100));
    }

    #[test]
    fn huge_argument() {
        // ln(10^300) = 300 ln 10 = 690.775527898213705205397436...
        let x = num_traits::pow(BigUint::from(10u32), 300);
        let e = ln_enclosure(&x, 100);
        let truth = Rational::new(69077552789821370520539744u128, 100_000_000_000_000_000_000_000u128);
        let ulp = Rational::new(1, 100_000_000_000_000_000_000_000u128);
        assert!(e.lo() <= &truth + &ulp && &truth - &ulp <= e.hi());
    }

    #[test]
    fn schedule_doubles_to_cap() {
        assert_eq!(precision_schedule(128, 4096), vec![128, 256, 512, 1024, 2048, 4096]);
        assert_eq!(precision_schedule(128, 100), vec![100]);
        assert_eq!(precision_schedule(128, 300), vec![128, 256, 300]);
    }

    #[test]
    fn arithmetic_rounds_outward() {
        let a = Enclosure { lo: BigInt::from(5), hi: BigInt::from(7), bits: 2 };
        let d = a.div_int(2);
        assert_eq!((d.lo, d.hi), (BigInt::from(2), BigInt::from(4)));
        let m = a.mul_int(-3);
        assert_eq!((m.lo, m.hi), (BigInt::from(-21), BigInt::from(-15)));
        let r = Enclosure { lo: BigInt::from(-5), hi: BigInt::from(5), bits: 2 }.round_to(1);
        assert_eq!((r.lo, r.hi), (BigInt::from(-3), BigInt::from(3)));
    }

    proptest! {
        #[test]
        fn contains_f64_logarithm(x in 1u64..u64::MAX, bits in 40u32..200) {
            let e = ln_f64(x, bits);
            let approx = (x as f64).ln();
            prop_assert!(e.lo().to_f64() <= approx + 1e-9);
            prop_assert!(e.hi().to_f64() >= approx - 1e-9);
            prop_assert!(e.width() <= Rational::new(1u64 << 20, 1u64) * Rational::new(1, BigInt::one() << bits));
        }

        #[test]
        fn additive_over_products(a in 2u64..1_000_000, b in 2u64..1_000_000) {
            let bits = 96;
            let sum = ln_f64(a, bits).add(&ln_f64(b, bits));
            let prod = ln_enclosure(&(BigUint::from(a) * BigUint::from(b)), bits);
            // both enclose ln(ab), so they must overlap
            prop_assert!(sum.lo() <= prod.hi() && prod.lo() <= sum.hi());
        }
    }
}
