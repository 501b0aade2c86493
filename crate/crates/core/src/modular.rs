//! Residue arithmetic mod p^n (n <= 5): reduction of rationals, Fermat
//! quotients, Teichmüller characters, truncated p-adic log/exp, and
//! generalized Bernoulli numbers of the form B_{1, omega^{-k}}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, ToPrimitive, Zero};

use crate::exact::{bernoulli, bernoulli_hat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("value {value} is not a unit mod {prime}^{exponent}")]
    NonUnit {
        value: u64,
        prime: u64,
        exponent: u8,
    },
    #[error("denominator divisible by p={prime} (reduction undefined mod {prime}^{exponent})")]
    NonUnitDenominator { prime: u64, exponent: u8 },
    #[error("argument must be congruent to {expected} mod p")]
    NotOneUnit { expected: u64 },
    #[error("prime {prime} too small for truncated series at exponent {exponent}")]
    SmallPrime { prime: u64, exponent: u8 },
    #[error("p={prime} does not divide the intermediate value; cannot shift by p")]
    NotDivisible { prime: u64 },
    #[error("guard violated: requires {requirement}")]
    Guard { requirement: String },
}

pub type ModResult<T> = Result<T, ModError>;

pub const MAX_EXPONENT: u8 = 5;

/// An integer residue mod p^n together with its (p, n) tag.
///
/// Arithmetic between residues of different (p, n) is refused (panics): the tag
/// travels with the value so an identity evaluator cannot silently mix moduli.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct ResidueValue {
    value: u64,
    prime: u64,
    exponent: u8,
    modulus: u64,
}

impl fmt::Debug for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.prime, self.exponent)
    }
}

impl fmt::Display for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.prime, self.exponent)
    }
}

fn pow_u64(base: u64, exp: u8) -> u64 {
    let mut out: u64 = 1;
    for _ in 0..exp {
        out = out.checked_mul(base).expect("modulus overflow");
    }
    out
}

impl ResidueValue {
    /// Internal exponents run one above [`MAX_EXPONENT`] so that
    /// divide-by-p steps can work at n+1 before shifting down.
    pub fn new(value: i128, prime: u64, exponent: u8) -> Self {
        assert!(prime >= 2, "prime must be >= 2");
        assert!(
            (1..=MAX_EXPONENT + 1).contains(&exponent),
            "exponent out of range"
        );
        let modulus = pow_u64(prime, exponent);
        let v = value.rem_euclid(modulus as i128) as u64;
        ResidueValue {
            value: v,
            prime,
            exponent,
            modulus,
        }
    }

    pub fn zero(prime: u64, exponent: u8) -> Self {
        Self::new(0, prime, exponent)
    }

    pub fn one(prime: u64, exponent: u8) -> Self {
        Self::new(1, prime, exponent)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u8 {
        self.exponent
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check_same(&self, rhs: &Self) {
        assert!(
            self.prime == rhs.prime && self.exponent == rhs.exponent,
            "mixed moduli: {}^{} vs {}^{}",
            self.prime,
            self.exponent,
            rhs.prime,
            rhs.exponent
        );
    }

    pub fn mul_u64(self, k: u64) -> Self {
        let v = (self.value as u128 * (k % self.modulus) as u128 % self.modulus as u128) as u64;
        ResidueValue { value: v, ..self }
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self.value as u128;
        let m = self.modulus as u128;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        ResidueValue {
            value: acc as u64,
            ..self
        }
    }

    /// Power with a (possibly negative) exponent; negative powers require a
    /// unit base.
    pub fn powi(self, exp: i64) -> ModResult<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    pub fn inv(self) -> ModResult<Self> {
        if self.value % self.prime == 0 {
            return Err(ModError::NonUnit {
                value: self.value,
                prime: self.prime,
                exponent: self.exponent,
            });
        }
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(ResidueValue::new(s0, self.prime, self.exponent))
    }

    pub fn div(self, rhs: Self) -> ModResult<Self> {
        self.check_same(&rhs);
        Ok(self * rhs.inv()?)
    }

    /// p-adic valuation of the stored value, capped at the exponent.
    pub fn valuation(&self) -> u8 {
        if self.value == 0 {
            return self.exponent;
        }
        let mut v = 0;
        let mut x = self.value;
        while x % self.prime == 0 {
            x /= self.prime;
            v += 1;
        }
        v
    }

    /// Divides an exponent-(n+1) residue by p, landing in exponent n.
    /// Errors if p does not divide the value.
    pub fn shift_down(self) -> ModResult<Self> {
        assert!(self.exponent >= 2);
        if self.value % self.prime != 0 {
            return Err(ModError::NotDivisible { prime: self.prime });
        }
        Ok(ResidueValue::new(
            (self.value / self.prime) as i128,
            self.prime,
            self.exponent - 1,
        ))
    }

    /// Reduces to a smaller exponent (forgetting higher p-powers).
    pub fn truncate(self, exponent: u8) -> Self {
        assert!(exponent <= self.exponent);
        ResidueValue::new(self.value as i128, self.prime, exponent)
    }

    /// Re-reads the value at a larger exponent after multiplying by p^k,
    /// which is well-defined: x mod p^n determines x*p^k mod p^{n+k}.
    pub fn mul_p_pow(self, k: u8) -> Self {
        let target = self.exponent + k;
        assert!(target <= MAX_EXPONENT + 1);
        let mut v = self.value as u128;
        for _ in 0..k {
            v *= self.prime as u128;
        }
        ResidueValue::new(v as i128, self.prime, target)
    }
}

impl Add for ResidueValue {
    type Output = ResidueValue;
    fn add(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        ResidueValue {
            value: v as u64,
            ..self
        }
    }
}

impl Sub for ResidueValue {
    type Output = ResidueValue;
    fn sub(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let v =
            (self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128;
        ResidueValue {
            value: v as u64,
            ..self
        }
    }
}

impl Mul for ResidueValue {
    type Output = ResidueValue;
    fn mul(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let v = self.value as u128 * rhs.value as u128 % self.modulus as u128;
        ResidueValue {
            value: v as u64,
            ..self
        }
    }
}

impl Neg for ResidueValue {
    type Output = ResidueValue;
    fn neg(self) -> Self {
        let v = (self.modulus - self.value) % self.modulus;
        ResidueValue { value: v, ..self }
    }
}

/// Reduces an exact rational mod p^n via a modular inverse of the denominator.
pub fn reduce_rational(r: &Rational, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    let modulus = BigInt::from(pow_u64(prime, exponent));
    let den = r.denom();
    if den.mod_floor(&BigInt::from(prime)).is_zero() {
        return Err(ModError::NonUnitDenominator { prime, exponent });
    }
    let num_red = r.numer().mod_floor(&modulus).to_u64().unwrap();
    let den_red = den.mod_floor(&modulus).to_u64().unwrap();
    let num = ResidueValue::new(num_red as i128, prime, exponent);
    let den = ResidueValue::new(den_red as i128, prime, exponent);
    num.div(den)
}

/// Reduces a big integer mod p^n.
pub fn reduce_int(x: &BigInt, prime: u64, exponent: u8) -> ResidueValue {
    let modulus = BigInt::from(pow_u64(prime, exponent));
    ResidueValue::new(
        x.mod_floor(&modulus).to_u64().unwrap() as i128,
        prime,
        exponent,
    )
}

/// The Fermat quotient `q_p(a) = (a^{p-1} - 1) / p` of a nonzero rational,
/// computed mod p^n by working at exponent n+1 and dividing out one p.
pub fn fermat_quotient(a: &Rational, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    assert!(!a.is_zero());
    let lifted = reduce_rational(a, prime, exponent + 1)?;
    if lifted.value() % prime == 0 {
        return Err(ModError::NonUnit {
            value: lifted.value(),
            prime,
            exponent,
        });
    }
    let power = lifted.pow(prime - 1) - ResidueValue::one(prime, exponent + 1);
    power.shift_down()
}

/// The Teichmüller lift `omega(a) = a^{p^{n-1}} mod p^n`: the unique
/// (p-1)-st root of unity congruent to `a` mod p.
pub fn teichmuller(a: i128, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    let x = ResidueValue::new(a, prime, exponent);
    if x.value() % prime == 0 {
        return Err(ModError::NonUnit {
            value: x.value(),
            prime,
            exponent,
        });
    }
    let mut e: u64 = 1;
    for _ in 0..exponent - 1 {
        e = e.checked_mul(prime).expect("teichmuller exponent overflow");
    }
    Ok(x.pow(e))
}

/// Truncated p-adic logarithm of a 1-unit: `sum_{j>=1} (-1)^{j-1} (u-1)^j / j`.
///
/// Requires `u = 1 mod p` and `p > n`; under that guard every term with
/// `j >= n` has valuation >= n, so `j < n` terms are exact and `j < p` keeps
/// all the divisions by j invertible.
pub fn padic_log(u: ResidueValue, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    if u.value() % prime != 1 % prime {
        return Err(ModError::NotOneUnit { expected: 1 });
    }
    if prime <= exponent as u64 {
        return Err(ModError::SmallPrime { prime, exponent });
    }
    let x = u - ResidueValue::one(prime, exponent);
    let mut acc = ResidueValue::zero(prime, exponent);
    let mut xp = ResidueValue::one(prime, exponent);
    for j in 1..=exponent as u64 {
        xp = xp * x;
        if xp.is_zero() {
            break;
        }
        let term = xp.div(ResidueValue::new(j as i128, prime, exponent))?;
        if j % 2 == 1 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    Ok(acc)
}

/// Truncated p-adic exponential of a topologically nilpotent element:
/// `sum_{j>=0} x^j / j!` for `x = 0 mod p`, guarded by `p > n + 1`.
pub fn padic_exp(x: ResidueValue, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    if x.value() % prime != 0 {
        return Err(ModError::NotOneUnit { expected: 0 });
    }
    if prime <= exponent as u64 + 1 {
        return Err(ModError::SmallPrime { prime, exponent });
    }
    let mut acc = ResidueValue::one(prime, exponent);
    let mut term = ResidueValue::one(prime, exponent);
    for j in 1..=exponent as u64 {
        term = (term * x).div(ResidueValue::new(j as i128, prime, exponent))?;
        if term.is_zero() {
            break;
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// The generalized Bernoulli number `B_{1, omega^{-k}} = (1/p) sum_a omega(a)^{-k} a`
/// mod p^n, computed at exponent n+1 and divided by p.
///
/// Requires `p > k + 1` and `n <= 4`.
pub fn gen_bernoulli_1(k: u32, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    if prime <= k as u64 + 1 {
        return Err(ModError::Guard {
            requirement: format!("p > {} for B_(1, omega^-{k})", k + 1),
        });
    }
    if exponent > 4 {
        return Err(ModError::Guard {
            requirement: "exponent <= 4 for generalized Bernoulli numbers".into(),
        });
    }
    let lifted_exp = exponent + 1;
    // omega(a)^{-k} = omega(a)^{(p-1) - (k mod (p-1))} since omega has order
    // dividing p-1 even at the lifted exponent.
    let e = (prime - 1 - (k as u64 % (prime - 1))) % (prime - 1);
    let mut acc = ResidueValue::zero(prime, lifted_exp);
    for a in 1..prime {
        let w = teichmuller(a as i128, prime, lifted_exp)?;
        acc = acc + w.pow(e).mul_u64(a);
    }
    acc.shift_down()
}

/// `B_m mod p^n`; errors with `NonUnitDenominator` when (p-1) | m puts p in
/// the denominator (von Staudt-Clausen).
pub fn bernoulli_mod(m: usize, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    reduce_rational(&bernoulli(m), prime, exponent)
}

/// `B_m / m mod p^n`.
pub fn bhat_mod(m: usize, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    reduce_rational(&bernoulli_hat(m), prime, exponent)
}

/// Deterministic primality check by trial division (the sweeps stay far below
/// the range where this would matter).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in the inclusive range `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| is_prime(n)).collect()
}

/// An element of exact multiplicative order d mod p (requires d | p-1).
/// Returns the first admissible base's power, so the choice is deterministic.
pub fn element_of_order(d: u64, prime: u64) -> Option<u64> {
    if d == 0 || (prime - 1) % d != 0 {
        return None;
    }
    if d == 1 {
        return Some(1);
    }
    let n1 = ResidueValue::one(prime, 1);
    for a in 2..prime {
        let x = ResidueValue::new(a as i128, prime, 1).pow((prime - 1) / d);
        if x == n1 {
            continue;
        }
        // check exact order: x^{d/q} != 1 for every prime q | d
        let mut ok = true;
        let mut dd = d;
        let mut q = 2;
        let mut qs = Vec::new();
        while q * q <= dd {
            if dd % q == 0 {
                qs.push(q);
                while dd % q == 0 {
                    dd /= q;
                }
            }
            q += 1;
        }
        if dd > 1 {
            qs.push(dd);
        }
        for &q in &qs {
            if x.pow(d / q) == n1 {
                ok = false;
                break;
            }
        }
        if ok {
            return Some(x.value());
        }
    }
    None
}

/// `sum_{a=1}^{p-1} a^e mod p^n` for a possibly negative exponent.
pub fn power_sum(e: i64, prime: u64, exponent: u8) -> ModResult<ResidueValue> {
    let mut acc = ResidueValue::zero(prime, exponent);
    for a in 1..prime {
        acc = acc + ResidueValue::new(a as i128, prime, exponent).powi(e)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{harmonic, rat, rat_int};

    fn res(v: i128, p: u64, n: u8) -> ResidueValue {
        ResidueValue::new(v, p, n)
    }

    #[test]
    fn reduce_rational_examples() {
        assert_eq!(reduce_rational(&rat(-1, 30), 7, 1).unwrap(), res(3, 7, 1));
        assert_eq!(reduce_rational(&rat_int(0), 11, 2).unwrap(), res(0, 11, 2));
        assert!(matches!(
            reduce_rational(&rat(1, 6), 3, 1),
            Err(ModError::NonUnitDenominator { .. })
        ));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(res(2, 5, 2).inv().unwrap(), res(13, 5, 2));
        assert_eq!(res(1, 7, 3).inv().unwrap(), res(1, 7, 3));
        assert!(res(5, 5, 2).inv().is_err());
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn mixed_moduli_refused() {
        let _ = res(1, 5, 1) + res(1, 5, 2);
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(
            fermat_quotient(&rat_int(2), 5, 1).unwrap(),
            res(3, 5, 1) // (16-1)/5
        );
        assert_eq!(fermat_quotient(&rat_int(1), 13, 2).unwrap(), res(0, 13, 2));
        assert_eq!(
            fermat_quotient(&rat_int(2), 7, 1).unwrap(),
            res(2, 7, 1) // (64-1)/7 = 9
        );
        // q_p(ab) = q_p(a) + q_p(b) mod p
        for p in [5u64, 7, 11, 13] {
            let q6 = fermat_quotient(&rat_int(6), p, 1).unwrap();
            let q2 = fermat_quotient(&rat_int(2), p, 1).unwrap();
            let q3 = fermat_quotient(&rat_int(3), p, 1).unwrap();
            assert_eq!(q6, q2 + q3);
        }
    }

    #[test]
    fn teichmuller_examples() {
        assert_eq!(teichmuller(2, 5, 2).unwrap(), res(7, 5, 2));
        assert_eq!(teichmuller(1, 11, 3).unwrap(), res(1, 11, 3));
        assert_eq!(teichmuller(3, 5, 1).unwrap(), res(3, 5, 1));
        assert!(teichmuller(10, 5, 2).is_err());
    }

    #[test]
    fn teichmuller_root_of_unity() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
            for n in 1..=4u8 {
                for a in 1..p {
                    let w = teichmuller(a as i128, p, n).unwrap();
                    assert_eq!(w.pow(p - 1), ResidueValue::one(p, n));
                    assert_eq!(w.value() % p, a);
                }
            }
        }
    }

    #[test]
    fn padic_log_exp_examples() {
        // log(1+p) mod p^2 keeps only the j=1 term
        let u = res(8, 7, 2);
        assert_eq!(padic_log(u, 7, 2).unwrap(), res(7, 7, 2));
        assert_eq!(padic_log(res(1, 7, 3), 7, 3).unwrap(), res(0, 7, 3));
        assert_eq!(padic_exp(res(0, 7, 3), 7, 3).unwrap(), res(1, 7, 3));
        assert_eq!(padic_exp(res(7, 7, 2), 7, 2).unwrap(), res(8, 7, 2));
        assert!(padic_log(res(2, 7, 2), 7, 2).is_err());
        assert!(padic_log(res(4, 3, 3), 3, 3).is_err());
    }

    #[test]
    fn padic_log_exp_roundtrip() {
        // exhaustive over all 1-units mod 11^3
        let (p, n) = (11u64, 3u8);
        for t in 0..p.pow(n as u32 - 1) {
            let u = res((1 + t * p) as i128, p, n);
            let x = padic_log(u, p, n).unwrap();
            assert_eq!(x.value() % p, 0);
            assert_eq!(
                padic_exp(x, p, n).unwrap(),
                u,
                "roundtrip failed at u={u:?}"
            );
            // and the other direction
            let y = res((t * p) as i128, p, n);
            assert_eq!(padic_log(padic_exp(y, p, n).unwrap(), p, n).unwrap(), y);
        }
    }

    #[test]
    fn binomial_harmonic_congruence() {
        // (-1)^n C(p-1, n) = 1 - p H_n (mod p^2) for 1 <= n < p
        for p in primes_in(3, 97) {
            for n in 1..p {
                let lhs_sign = if n % 2 == 0 { 1 } else { -1 };
                let c = crate::exact::binomial_rat(p - 1, n as i64) * rat_int(lhs_sign);
                let rhs = rat_int(1) - rat_int(p as i64) * harmonic(n as usize);
                assert_eq!(
                    reduce_rational(&c, p, 2).unwrap(),
                    reduce_rational(&rhs, p, 2).unwrap(),
                    "failed at p={p} n={n}"
                );
            }
        }
        // spot value p=5, n=2: C(4,2)=6 vs 1 - 5*(3/2) = 6 mod 25
        assert_eq!(
            reduce_rational(&(rat_int(1) - rat_int(5) * harmonic(2)), 5, 2).unwrap(),
            res(6, 5, 2)
        );
    }

    #[test]
    fn harmonic_reflection() {
        // H_{p-n-1} = H_n (mod p) for 1 <= n <= p-2
        for p in primes_in(3, 97) {
            for n in 1..=(p - 2) as usize {
                let lhs = reduce_rational(&harmonic(p as usize - n - 1), p, 1).unwrap();
                let rhs = reduce_rational(&harmonic(n), p, 1).unwrap();
                assert_eq!(lhs, rhs, "failed at p={p} n={n}");
            }
        }
    }

    #[test]
    fn gen_bernoulli_vs_classical() {
        // B_{1, omega^{-k}} = -B_{p-k}/k = B_{p-k}/(p-k) (mod p) for p > k+1
        for p in primes_in(5, 37) {
            for k in 2..=6u32 {
                if p <= k as u64 + 1 {
                    continue;
                }
                let lhs = gen_bernoulli_1(k, p, 1).unwrap();
                let rhs = bhat_mod((p - k as u64) as usize, p, 1).unwrap();
                assert_eq!(lhs, rhs, "failed at p={p} k={k}");
            }
        }
        // fixed spot checks through both routes; at even k both sides are 0
        // because B_{p-k} has odd index
        assert_eq!(
            gen_bernoulli_1(3, 11, 1).unwrap(),
            reduce_rational(&(crate::exact::bernoulli(8) / rat_int(8)), 11, 1).unwrap()
        );
        assert_eq!(
            gen_bernoulli_1(3, 7, 1).unwrap(),
            reduce_rational(&rat(-1, 120), 7, 1).unwrap()
        );
        assert_eq!(gen_bernoulli_1(2, 7, 1).unwrap(), res(0, 7, 1));
    }

    #[test]
    fn gen_bernoulli_untwisted_column() {
        // sum_a omega(a)^0 * a = p(p-1)/2, so dividing by p gives (p-1)/2
        for p in primes_in(3, 31) {
            let lhs = gen_bernoulli_1(p as u32 - 1, p, 1);
            // k = p-1 makes omega^{-k} trivial, but the guard requires p > k+1;
            // compute the column directly instead.
            assert!(lhs.is_err());
            let mut acc = ResidueValue::zero(p, 2);
            for a in 1..p {
                acc = acc + ResidueValue::new(a as i128, p, 2);
            }
            assert_eq!(acc.shift_down().unwrap(), res(((p - 1) / 2) as i128, p, 1));
        }
    }

    #[test]
    fn bernoulli_mod_examples() {
        assert_eq!(bernoulli_mod(4, 7, 1).unwrap(), res(3, 7, 1));
        assert!(matches!(
            bernoulli_mod(6, 7, 1),
            Err(ModError::NonUnitDenominator { .. })
        ));
        assert_eq!(
            bhat_mod(4, 7, 1).unwrap(),
            reduce_rational(&rat(-1, 120), 7, 1).unwrap()
        );
    }

    #[test]
    fn kummer_sun_congruence() {
        // Bhat_{m(p-1)+l} = m Bhat_{p-1+l} - (m-1)(1 - p^{l-1}) Bhat_l (mod p^2)
        for p in primes_in(3, 61) {
            for m in 1..=3usize {
                for l in [2usize, 4, 6, 8] {
                    if l % (p as usize - 1) == 0 {
                        continue;
                    }
                    let lhs = bhat_mod(m * (p as usize - 1) + l, p, 2).unwrap();
                    let correction = rat_int(m as i64 - 1)
                        * (rat_int(1) - rat_int(p as i64).pow(l as i32 - 1))
                        * crate::exact::bernoulli_hat(l);
                    let rhs_rat = rat_int(m as i64)
                        * crate::exact::bernoulli_hat(p as usize - 1 + l)
                        - correction;
                    let rhs = reduce_rational(&rhs_rat, p, 2).unwrap();
                    assert_eq!(lhs, rhs, "failed at p={p} m={m} l={l}");
                }
            }
        }
    }

    #[test]
    fn primality_helpers() {
        assert_eq!(primes_in(2, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_prime(199));
        assert!(!is_prime(1));
        assert!(!is_prime(221)); // 13 * 17
    }

    #[test]
    fn order_elements() {
        assert_eq!(element_of_order(1, 7), Some(1));
        let x = element_of_order(3, 7).unwrap();
        let r = res(x as i128, 7, 1);
        assert_eq!(r.pow(3), ResidueValue::one(7, 1));
        assert_ne!(r, ResidueValue::one(7, 1));
        assert_eq!(element_of_order(3, 5), None); // 3 does not divide 4
        let y = element_of_order(4, 13).unwrap();
        let ry = res(y as i128, 13, 1);
        assert_eq!(ry.pow(4), ResidueValue::one(13, 1));
        assert_ne!(ry.pow(2), ResidueValue::one(13, 1));
    }
}
