//! Exact rational arithmetic: Bernoulli numbers, binomial coefficients,
//! harmonic numbers. Everything downstream reduces these mod p^n.

use std::sync::Mutex;

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Zero};

pub type Rational = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    BigRational::from_integer(BigInt::from(num))
}

/// `C(n, k)` with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

pub fn binomial_rat(n: u64, k: i64) -> Rational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, binomial(n, k)))
}

static BERNOULLI_CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// The `m`-th Bernoulli number for the generating function `t e^t / (e^t - 1)`,
/// so the index-1 value is `+1/2`.
///
/// Computed by the recurrence `sum_{j=0}^{m} C(m+1, j) B_j = m + 1` and cached
/// globally; the cache is grown under a lock, so concurrent callers observe a
/// pure function.
pub fn bernoulli(m: usize) -> Rational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(BigRational::one());
    }
    while cache.len() <= m {
        let k = cache.len(); // computing B_k
        if k >= 3 && k % 2 == 1 {
            cache.push(BigRational::zero());
            continue;
        }
        // Pascal row C(k+1, j) built incrementally.
        let mut c = BigInt::one(); // C(k+1, 0)
        let mut acc = BigRational::zero();
        for (j, b) in cache.iter().enumerate().take(k) {
            if !b.is_zero() {
                acc += BigRational::from_integer(c.clone()) * b;
            }
            c = c * BigInt::from(k as u64 + 1 - j as u64) / BigInt::from(j as u64 + 1);
        }
        // c is now C(k+1, k)
        let b_k = (BigRational::from_integer(BigInt::from(k as u64 + 1)) - acc)
            / BigRational::from_integer(c);
        cache.push(b_k);
    }
    cache[m].clone()
}

/// `B_m / m` as an exact rational (`m >= 1`).
pub fn bernoulli_hat(m: usize) -> Rational {
    assert!(m >= 1);
    bernoulli(m) / BigRational::from_integer(BigInt::from(m as u64))
}

/// The harmonic number `H_n = 1 + 1/2 + ... + 1/n`, with the empty sum
/// `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    let mut acc = BigRational::zero();
    for j in 1..=n {
        acc += BigRational::new(BigInt::one(), BigInt::from(j as u64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(5, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat_int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_vanish() {
        for m in (3..=99).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m} should vanish");
        }
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        // denominator of B_{2m} = product of primes q with (q-1) | 2m
        for m in 1..=30 {
            let twom = 2 * m;
            let mut expected = BigInt::one();
            for q in 2..=(twom as u64 + 1) {
                let is_prime = (2..q).all(|d| q % d != 0);
                if is_prime && twom as u64 % (q - 1) == 0 {
                    expected *= BigInt::from(q);
                }
            }
            assert_eq!(
                bernoulli(twom).denom().clone(),
                expected,
                "denominator law failed at 2m = {twom}"
            );
        }
    }

    #[test]
    fn faulhaber_consistency() {
        // sum_{a=1}^{p-1} a^m = (1/(m+1)) sum_{i=1}^{m+1} C(m+1, i) B'_{m+1-i} p^i
        // where B'_j = (-1)^j B_j (the lower-summation convention; with the
        // index-1 value +1/2 the identity fails at the i = m term).
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 1usize..=10 {
                let direct: Rational = (1..p)
                    .map(|a| rat_int(a as i64).pow(m as i32))
                    .fold(Rational::zero(), |acc, x| acc + x);
                let mut rhs = Rational::zero();
                for i in 1..=m + 1 {
                    let j = m + 1 - i;
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    rhs += binomial_rat(m as u64 + 1, i as i64)
                        * bernoulli(j)
                        * rat_int(sign)
                        * rat_int(p as i64).pow(i as i32);
                }
                rhs /= rat_int(m as i64 + 1);
                assert_eq!(direct, rhs, "faulhaber failed at p={p} m={m}");
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), rat_int(0));
        assert_eq!(harmonic(2), rat(3, 2));
        assert_eq!(harmonic(4), rat(25, 12));
    }

    #[test]
    fn bernoulli_deep_index_is_finite() {
        // the deepest sweeps need indices around 3p - 3 for p up to 199
        let b = bernoulli(600);
        assert!(!b.denom().is_zero());
        assert!(b.numer().abs().to_string().len() > 100);
    }
}
