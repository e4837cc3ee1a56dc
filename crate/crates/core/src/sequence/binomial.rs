use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Pascal rows `0..=n_max` plus central coefficients `C(2k, k)` for `k <= n_max`.
///
/// Built once, then read-only; safe to share across threads.
#[derive(Debug, Clone)]
pub struct BinomialCache {
    rows: Vec<Vec<BigUint>>,
    central: Vec<BigUint>,
}

impl BinomialCache {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        let mut central = Vec::with_capacity(n_max + 1);
        central.push(BigUint::one());
        for k in 0..n_max as u64 {
            // C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)
            let next = &central[k as usize] * (2 * (2 * k + 1)) / (k + 1);
            central.push(next);
        }
        BinomialCache { rows, central }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)` for `n <= n_max`; zero for `k` out of range.
    pub fn get(&self, n: usize, k: i64) -> BigUint {
        if k < 0 || k as usize > n {
            return BigUint::zero();
        }
        self.rows[n][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn central(&self, k: usize) -> &BigUint {
        &self.central[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn large_value() {
        let expected: BigUint = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn cache_matches_direct() {
        let cache = BinomialCache::new(40);
        for n in 0..=40usize {
            for k in -1..=(n as i64 + 1) {
                assert_eq!(cache.get(n, k), binomial(n as u64, k), "C({n},{k})");
            }
        }
        for k in 0..=40usize {
            assert_eq!(cache.central(k), &binomial(2 * k as u64, k as i64));
        }
    }
}
