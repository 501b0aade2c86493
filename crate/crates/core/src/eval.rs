//! Evaluators for the truncated sums: multiple harmonic sums, the
//! multi-variable finite polylogarithm flavors, one-variable head/tail forms,
//! and the composed-denominator variant with its surjection decomposition.
//!
//! The general path is a running-sum recurrence that costs O(p * depth) per
//! prime. The one-variable naive enumeration is kept deliberately free of
//! that machinery so it can serve as an independent oracle.

use num::{BigInt, Integer, Zero};

use crate::exact::Rational;
use crate::index::Index;
use crate::modular::{ModError, ModResult, ResidueValue};

/// Which truncated sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// all arguments 1; the plain multiple harmonic sum
    Zeta,
    /// t_1^{n_1} ... t_m^{n_m}
    Harmonic,
    /// t_1^{n_1-n_2} ... t_{m-1}^{n_{m-1}-n_m} t_m^{n_m}
    Shuffle,
    /// single variable at the outermost slot: t^{n_1}
    Head,
    /// single variable at the innermost slot: t^{n_m}
    Tail,
    /// composed denominators (l_1)(l_1+l_2)...(l_1+...+l_m)
    OnoYamamoto,
}

/// A fully specified evaluation: index, rational arguments, flavor,
/// star/non-star, and the modulus p^n.
#[derive(Debug, Clone)]
pub struct EvalRequest {
    pub index: Index,
    pub arguments: Vec<Rational>,
    pub star: bool,
    pub flavor: Flavor,
    pub prime: u64,
    pub exponent: u8,
}

impl EvalRequest {
    pub fn evaluate(&self) -> ModResult<ResidueValue> {
        let (p, n) = (self.prime, self.exponent);
        match self.flavor {
            Flavor::Zeta => {
                expect_args(self, 0)?;
                Ok(mhs(&self.index, p, n, self.star))
            }
            Flavor::Harmonic => {
                expect_args(self, self.index.depth())?;
                fmp_harmonic(&self.index, &self.arguments, p, n, self.star)
            }
            Flavor::Shuffle => {
                expect_args(self, self.index.depth())?;
                fmp_shuffle(&self.index, &self.arguments, p, n, self.star)
            }
            Flavor::Head => {
                expect_args(self, 1)?;
                fast_nested_eval(&self.index, &self.arguments[0], p, n, self.star, End::Head)
            }
            Flavor::Tail => {
                expect_args(self, 1)?;
                fast_nested_eval(&self.index, &self.arguments[0], p, n, self.star, End::Tail)
            }
            Flavor::OnoYamamoto => {
                expect_args(self, 1)?;
                if self.star {
                    return Err(ModError::Guard {
                        requirement: "the composed-denominator sum has no star form".into(),
                    });
                }
                oy_li(&self.index, &self.arguments[0], p, n)
            }
        }
    }
}

fn expect_args(req: &EvalRequest, want: usize) -> ModResult<()> {
    if req.arguments.len() != want {
        return Err(ModError::Guard {
            requirement: format!(
                "flavor {:?} on depth {} wants {} argument(s), got {}",
                req.flavor,
                req.index.depth(),
                want,
                req.arguments.len()
            ),
        });
    }
    Ok(())
}

/// Which end of the chain the single variable occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Head,
    Tail,
}

/// Reduces an argument mod p^n. The denominator must be a p-unit; a zero or
/// p-divisible numerator is fine for plain power slots (the terms just
/// vanish) and is policed separately where inverses are required.
fn reduce_arg(t: &Rational, p: u64, n: u8) -> ModResult<ResidueValue> {
    crate::modular::reduce_rational(t, p, n)
}

fn unit_arg(t: &Rational, p: u64, n: u8) -> ModResult<ResidueValue> {
    let r = reduce_arg(t, p, n)?;
    if r.value() % p == 0 {
        return Err(ModError::NonUnit {
            value: r.value(),
            prime: p,
            exponent: n,
        });
    }
    Ok(r)
}

/// Core running-sum recurrence over residue arguments.
///
/// Non-star: S_j(x) = S_j(x-1) + t_j^x x^{-k_j} S_{j+1}(x-1), answer S_1(p-1).
/// Star:     T_j(x) = T_j(x-1) + t_j^x x^{-k_j} T_{j+1}(x),   answer T_1(p-1).
pub fn harmonic_sum_res(
    ks: &[u32],
    args: &[ResidueValue],
    p: u64,
    n: u8,
    star: bool,
) -> ModResult<ResidueValue> {
    let m = ks.len();
    assert_eq!(args.len(), m);
    let zero = ResidueValue::zero(p, n);
    let one = ResidueValue::one(p, n);
    let mut state = vec![zero; m + 1];
    state[m] = one;
    // running powers t_j^x
    let mut tp = vec![one; m];
    for x in 1..p {
        let x_res = ResidueValue::new(x as i128, p, n);
        let x_inv = x_res.inv()?;
        if star {
            for j in (0..m).rev() {
                tp[j] = tp[j] * args[j];
                let phi = tp[j] * x_inv.pow(ks[j] as u64);
                let upd = phi * state[j + 1];
                state[j] = state[j] + upd;
            }
        } else {
            let prev = state.clone();
            for j in 0..m {
                tp[j] = tp[j] * args[j];
                let phi = tp[j] * x_inv.pow(ks[j] as u64);
                state[j] = prev[j] + phi * prev[j + 1];
            }
        }
    }
    Ok(state[0])
}

/// The multiple harmonic sum (all arguments 1) mod p^n.
pub fn mhs(index: &Index, p: u64, n: u8, star: bool) -> ResidueValue {
    let one = ResidueValue::one(p, n);
    let args = vec![one; index.depth()];
    harmonic_sum_res(index.parts(), &args, p, n, star).expect("unit arguments never fail")
}

/// Multi-variable evaluation, harmonic flavor: t_i^{n_i} at slot i.
pub fn fmp_harmonic(
    index: &Index,
    args: &[Rational],
    p: u64,
    n: u8,
    star: bool,
) -> ModResult<ResidueValue> {
    let red: Vec<ResidueValue> = args
        .iter()
        .map(|t| reduce_arg(t, p, n))
        .collect::<ModResult<_>>()?;
    harmonic_sum_res(index.parts(), &red, p, n, star)
}

/// Residue-argument variant of [`fmp_harmonic`], for callers that build
/// arguments inside F_p (roots of unity and the like).
pub fn fmp_harmonic_res(
    index: &Index,
    args: &[ResidueValue],
    p: u64,
    n: u8,
    star: bool,
) -> ModResult<ResidueValue> {
    harmonic_sum_res(index.parts(), args, p, n, star)
}

/// Multi-variable evaluation, shuffle flavor: t_i^{n_i - n_{i+1}}, last slot
/// t_m^{n_m}. Equals the harmonic flavor at the ratio arguments
/// (t_1, t_2/t_1, ..., t_m/t_{m-1}), so every argument must be a p-unit.
pub fn fmp_shuffle(
    index: &Index,
    args: &[Rational],
    p: u64,
    n: u8,
    star: bool,
) -> ModResult<ResidueValue> {
    let red: Vec<ResidueValue> = args
        .iter()
        .map(|t| unit_arg(t, p, n))
        .collect::<ModResult<_>>()?;
    fmp_shuffle_res(index, &red, p, n, star)
}

pub fn fmp_shuffle_res(
    index: &Index,
    args: &[ResidueValue],
    p: u64,
    n: u8,
    star: bool,
) -> ModResult<ResidueValue> {
    let m = index.depth();
    assert_eq!(args.len(), m);
    let mut ratio = Vec::with_capacity(m);
    for j in 0..m {
        if j == 0 {
            ratio.push(args[0]);
        } else {
            ratio.push(args[j].div(args[j - 1])?);
        }
    }
    harmonic_sum_res(index.parts(), &ratio, p, n, star)
}

/// One-variable form by literal nested enumeration; the oracle path.
/// Cost grows like p^depth, so keep p small or the depth tiny.
pub fn fmp_one_var(
    index: &Index,
    t: &Rational,
    p: u64,
    n: u8,
    star: bool,
    end: End,
) -> ModResult<ResidueValue> {
    let tr = reduce_arg(t, p, n)?;
    let ks = index.parts();
    let m = ks.len();
    // powers of t up to p-1 and inverse powers of 1..p-1
    let mut tpow = Vec::with_capacity(p as usize);
    tpow.push(ResidueValue::one(p, n));
    for _ in 1..p {
        tpow.push(*tpow.last().unwrap() * tr);
    }
    let mut acc = ResidueValue::zero(p, n);
    let mut chain = vec![0u64; m];
    fn rec(
        pos: usize,
        m: usize,
        p: u64,
        n: u8,
        star: bool,
        end: End,
        ks: &[u32],
        tpow: &[ResidueValue],
        chain: &mut Vec<u64>,
        acc: &mut ResidueValue,
    ) -> ModResult<()> {
        if pos == m {
            let mut term = match end {
                End::Head => tpow[chain[0] as usize],
                End::Tail => tpow[chain[m - 1] as usize],
            };
            for (i, &x) in chain.iter().enumerate() {
                let xv = ResidueValue::new(x as i128, p, n);
                term = term * xv.inv()?.pow(ks[i] as u64);
            }
            *acc = *acc + term;
            return Ok(());
        }
        let hi = if pos == 0 {
            p - 1
        } else if star {
            chain[pos - 1]
        } else {
            chain[pos - 1].saturating_sub(1)
        };
        let mut x = hi;
        while x >= 1 {
            chain[pos] = x;
            rec(pos + 1, m, p, n, star, end, ks, tpow, chain, acc)?;
            x -= 1;
        }
        Ok(())
    }
    rec(0, m, p, n, star, end, ks, &tpow, &mut chain, &mut acc)?;
    Ok(acc)
}

/// One-variable form through the running-sum recurrence; must agree with
/// [`fmp_one_var`] bit for bit.
pub fn fast_nested_eval(
    index: &Index,
    t: &Rational,
    p: u64,
    n: u8,
    star: bool,
    end: End,
) -> ModResult<ResidueValue> {
    let m = index.depth();
    let tr = reduce_arg(t, p, n)?;
    let one = ResidueValue::one(p, n);
    let mut args = vec![one; m];
    match end {
        End::Head => args[0] = tr,
        End::Tail => args[m - 1] = tr,
    }
    harmonic_sum_res(index.parts(), &args, p, n, star)
}

/// The composed-denominator polylogarithm:
/// sum over 0 < l_1, ..., l_m < p of t^{l_1+...+l_m} / prod (l_1+...+l_i)^{k_i},
/// skipping tuples where any partial sum is divisible by p.
pub fn oy_li(index: &Index, t: &Rational, p: u64, n: u8) -> ModResult<ResidueValue> {
    let tr = unit_arg(t, p, n)?;
    let ks = index.parts();
    let m = ks.len();
    let max_sum = (m as u64) * (p - 1);
    let mut tpow = Vec::with_capacity(max_sum as usize + 1);
    tpow.push(ResidueValue::one(p, n));
    for _ in 1..=max_sum {
        tpow.push(*tpow.last().unwrap() * tr);
    }
    // inverses of the possible partial-sum values
    let mut inv = vec![None; max_sum as usize + 1];
    for v in 1..=max_sum {
        if v % p != 0 {
            inv[v as usize] = Some(ResidueValue::new(v as i128, p, n).inv()?);
        }
    }
    let mut acc = ResidueValue::zero(p, n);
    let mut stack: Vec<(u64, ResidueValue)> = Vec::with_capacity(m);
    // iterative depth-first over l_1..l_m with running partial products
    fn rec(
        pos: usize,
        partial_sum: u64,
        partial_prod: ResidueValue,
        m: usize,
        p: u64,
        ks: &[u32],
        tpow: &[ResidueValue],
        inv: &[Option<ResidueValue>],
        acc: &mut ResidueValue,
    ) {
        if pos == m {
            *acc = *acc + partial_prod * tpow[partial_sum as usize];
            return;
        }
        for l in 1..p {
            let s = partial_sum + l;
            if s % p == 0 {
                continue;
            }
            let f = inv[s as usize].expect("unit by construction");
            rec(
                pos + 1,
                s,
                partial_prod * f.pow(ks[pos] as u64),
                m,
                p,
                ks,
                tpow,
                inv,
                acc,
            );
        }
    }
    let _ = &mut stack;
    rec(
        0,
        0,
        ResidueValue::one(p, n),
        m,
        p,
        ks,
        &tpow,
        &inv,
        &mut acc,
    );
    Ok(acc)
}

/// A surjection [m] -> [l] with no equal neighbors, together with its descent
/// statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMap {
    /// phi(1), ..., phi(m), values in 1..=l
    pub values: Vec<usize>,
    /// l
    pub parts: usize,
    /// descent counts delta(i) = #{a < i : phi(a) > phi(a+1)} for i = 1..=m
    pub descents: Vec<usize>,
    /// class beta = delta(m) + 1
    pub beta: usize,
}

pub const MAX_PHI_DEPTH: usize = 6;

/// Enumerates all adjacent-distinct surjections [m] -> [l] over l = 1..=m.
pub fn enumerate_phi(m: usize) -> ModResult<Vec<PhiMap>> {
    if !(1..=MAX_PHI_DEPTH).contains(&m) {
        return Err(ModError::Guard {
            requirement: format!("surjection depth must lie in 1..={MAX_PHI_DEPTH}"),
        });
    }
    let mut out = Vec::new();
    for l in 1..=m {
        let mut values = vec![0usize; m];
        fn rec(pos: usize, m: usize, l: usize, values: &mut Vec<usize>, out: &mut Vec<PhiMap>) {
            if pos == m {
                let mut seen = vec![false; l + 1];
                for &v in values.iter() {
                    seen[v] = true;
                }
                if !seen[1..].iter().all(|&b| b) {
                    return;
                }
                let mut descents = Vec::with_capacity(m);
                let mut d = 0;
                for i in 1..=m {
                    if i >= 2 && values[i - 2] > values[i - 1] {
                        d += 1;
                    }
                    descents.push(d);
                }
                let beta = descents[m - 1] + 1;
                out.push(PhiMap {
                    values: values.clone(),
                    parts: l,
                    descents,
                    beta,
                });
                return;
            }
            for v in 1..=l {
                if pos > 0 && values[pos - 1] == v {
                    continue;
                }
                values[pos] = v;
                rec(pos + 1, m, l, values, out);
            }
        }
        rec(0, m, l, &mut values, &mut out);
    }
    Ok(out)
}

/// The surjection-decomposition route to [`oy_li`]:
/// sum_i t^{(i-1)p} sum_{phi in class i} of the harmonic-flavor sum with
/// grouped index (sum_{phi(j)=l} k_j, ..., sum_{phi(j)=1} k_j) and the single
/// non-1 argument t at slot l - phi(m) + 1.
pub fn oy_decompose(index: &Index, t: &Rational, p: u64, n: u8) -> ModResult<ResidueValue> {
    let m = index.depth();
    let tr = unit_arg(t, p, n)?;
    let ks = index.parts();
    let mut acc = ResidueValue::zero(p, n);
    for phi in enumerate_phi(m)? {
        let l = phi.parts;
        let mut grouped = vec![0u32; l];
        for (j, &v) in phi.values.iter().enumerate() {
            grouped[l - v] += ks[j];
        }
        let grouped = Index::new(grouped);
        let one = ResidueValue::one(p, n);
        let mut args = vec![one; l];
        let slot = l - phi.values[m - 1]; // 0-based position of t
        args[slot] = tr;
        let inner = harmonic_sum_res(grouped.parts(), &args, p, n, false)?;
        let outer = tr.pow(((phi.beta - 1) as u64) * p);
        acc = acc + outer * inner;
    }
    Ok(acc)
}

/// sum_{k=1}^{(p-1)/2} k^{-m} mod p^n.
pub fn half_range_power_sum(m: u32, p: u64, n: u8) -> ModResult<ResidueValue> {
    let mut acc = ResidueValue::zero(p, n);
    for k in 1..=(p - 1) / 2 {
        acc = acc + ResidueValue::new(k as i128, p, n).inv()?.pow(m as u64);
    }
    Ok(acc)
}

/// Deliberately naive multi-variable enumeration, used as the oracle against
/// the running-sum path in tests.
pub mod naive {
    use super::*;

    /// literal shuffle-flavor enumeration: t_i^(n_i - n_{i+1}), last slot
    /// t_m^(n_m)
    pub fn shuffle_multi(
        ks: &[u32],
        args: &[ResidueValue],
        p: u64,
        n: u8,
        star: bool,
    ) -> ModResult<ResidueValue> {
        let m = ks.len();
        assert_eq!(args.len(), m);
        let mut acc = ResidueValue::zero(p, n);
        let mut chain = vec![0u64; m];
        fn rec(
            pos: usize,
            p: u64,
            n: u8,
            star: bool,
            ks: &[u32],
            args: &[ResidueValue],
            chain: &mut Vec<u64>,
            acc: &mut ResidueValue,
        ) -> ModResult<()> {
            let m = ks.len();
            if pos == m {
                let mut term = ResidueValue::one(p, n);
                for i in 0..m {
                    let e = if i + 1 < m {
                        chain[i] - chain[i + 1]
                    } else {
                        chain[i]
                    };
                    let x = ResidueValue::new(chain[i] as i128, p, n);
                    term = term * args[i].pow(e) * x.inv()?.pow(ks[i] as u64);
                }
                *acc = *acc + term;
                return Ok(());
            }
            let hi = if pos == 0 {
                p - 1
            } else if star {
                chain[pos - 1]
            } else {
                chain[pos - 1].saturating_sub(1)
            };
            for x in 1..=hi {
                chain[pos] = x;
                rec(pos + 1, p, n, star, ks, args, chain, acc)?;
            }
            Ok(())
        }
        rec(0, p, n, star, ks, args, &mut chain, &mut acc)?;
        Ok(acc)
    }

    pub fn harmonic_multi(
        ks: &[u32],
        args: &[ResidueValue],
        p: u64,
        n: u8,
        star: bool,
    ) -> ModResult<ResidueValue> {
        let m = ks.len();
        assert_eq!(args.len(), m);
        let mut acc = ResidueValue::zero(p, n);
        let mut chain = vec![0u64; m];
        fn rec(
            pos: usize,
            m: usize,
            p: u64,
            n: u8,
            star: bool,
            ks: &[u32],
            args: &[ResidueValue],
            chain: &mut Vec<u64>,
            acc: &mut ResidueValue,
        ) -> ModResult<()> {
            if pos == m {
                let mut term = ResidueValue::one(p, n);
                for i in 0..m {
                    let x = ResidueValue::new(chain[i] as i128, p, n);
                    term = term * args[i].pow(chain[i]) * x.inv()?.pow(ks[i] as u64);
                }
                *acc = *acc + term;
                return Ok(());
            }
            let hi = if pos == 0 {
                p - 1
            } else if star {
                chain[pos - 1]
            } else {
                chain[pos - 1].saturating_sub(1)
            };
            for x in 1..=hi {
                chain[pos] = x;
                rec(pos + 1, m, p, n, star, ks, args, chain, acc)?;
            }
            Ok(())
        }
        rec(0, m, p, n, star, ks, args, &mut chain, &mut acc)?;
        Ok(acc)
    }
}

/// Splits a `num/den` literal into a Rational; plain integers allowed.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: BigInt = a.trim().parse().ok()?;
        let den: BigInt = b.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(num))
    }
}

/// True when gcd(numerator, p) = gcd(denominator, p) = 1.
pub fn is_p_unit(r: &Rational, p: u64) -> bool {
    let pbig = BigInt::from(p);
    !r.numer().mod_floor(&pbig).is_zero() && !r.denom().mod_floor(&pbig).is_zero()
}

/// True when the denominator is coprime to p (numerator may vanish).
pub fn is_p_integral(r: &Rational, p: u64) -> bool {
    let pbig = BigInt::from(p);
    !r.denom().mod_floor(&pbig).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::modular::primes_in;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec())
    }

    fn res(v: i128, p: u64, n: u8) -> ResidueValue {
        ResidueValue::new(v, p, n)
    }

    #[test]
    fn mhs_examples() {
        assert_eq!(mhs(&idx(&[2, 1]), 7, 1, false), res(3, 7, 1));
        assert_eq!(mhs(&idx(&[1]), 7, 1, true), res(0, 7, 1));
        assert_eq!(mhs(&idx(&[5]), 3, 1, false), res(0, 3, 1));
        // empty strict range when p <= depth
        assert_eq!(mhs(&idx(&[1, 1, 1]), 3, 1, false), res(0, 3, 1));
        assert_eq!(mhs(&idx(&[1, 1, 1]), 2, 2, false), res(0, 2, 2));
    }

    #[test]
    fn mhs_against_naive() {
        for p in primes_in(2, 13) {
            for star in [false, true] {
                for parts in [vec![1u32], vec![2], vec![1, 1], vec![2, 1], vec![1, 2, 1]] {
                    let k = idx(&parts);
                    let one = ResidueValue::one(p, 2);
                    let args = vec![one; k.depth()];
                    let naive = naive::harmonic_multi(k.parts(), &args, p, 2, star).unwrap();
                    assert_eq!(mhs(&k, p, 2, star), naive, "p={p} star={star} kk={k}");
                }
            }
        }
    }

    #[test]
    fn harmonic_flavor_examples() {
        // index (1), t = 1/2, p = 5: sum 2^{-k}/k = 3
        let v = fmp_harmonic(&idx(&[1]), &[rat(1, 2)], 5, 1, false).unwrap();
        assert_eq!(v, res(3, 5, 1));
        // and it matches the Fermat quotient of 2
        let q = crate::modular::fermat_quotient(&rat_int(2), 5, 1).unwrap();
        assert_eq!(v, q);
    }

    #[test]
    fn flavor_collapse_at_one() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..60 {
            let p = *[5u64, 7, 11, 13, 17, 31]
                .iter()
                .nth(rng.gen_range(0..6))
                .unwrap();
            let depth = rng.gen_range(1..=3);
            let parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=3)).collect();
            let k = idx(&parts);
            let star = rng.gen();
            let ones = vec![rat_int(1); depth];
            let a = fmp_harmonic(&k, &ones, p, 2, star).unwrap();
            let b = fmp_shuffle(&k, &ones, p, 2, star).unwrap();
            let c = mhs(&k, p, 2, star);
            assert_eq!(a, c);
            assert_eq!(b, c);
        }
    }

    #[test]
    fn shuffle_constant_args_equal_head() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let p = *[5u64, 7, 11, 13].iter().nth(rng.gen_range(0..4)).unwrap();
            let depth = rng.gen_range(1..=3);
            let parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=3)).collect();
            let k = idx(&parts);
            let star = rng.gen();
            let t = rat(rng.gen_range(1..=4), rng.gen_range(1..=4));
            if !is_p_unit(&t, p) {
                continue;
            }
            let args = vec![t.clone(); depth];
            let a = fmp_shuffle(&k, &args, p, 2, star).unwrap();
            let b = fast_nested_eval(&k, &t, p, 2, star, End::Head).unwrap();
            assert_eq!(a, b, "p={p} kk={k} t={t} star={star}");
        }
    }

    #[test]
    fn one_var_examples() {
        // head, {1}^2 at t=1, p=7: the depth-2 zeta value vanishes
        assert_eq!(
            fmp_one_var(&idx(&[1, 1]), &rat_int(1), 7, 1, false, End::Head).unwrap(),
            res(0, 7, 1)
        );
        // tail at t=1 collapses to the plain sum
        assert_eq!(
            fmp_one_var(&idx(&[2, 1]), &rat_int(1), 7, 1, false, End::Tail).unwrap(),
            res(3, 7, 1)
        );
        // head, (1), t=2, p=5: -2 q_5(2) = 4
        assert_eq!(
            fmp_one_var(&idx(&[1]), &rat_int(2), 5, 1, false, End::Head).unwrap(),
            res(4, 5, 1)
        );
    }

    #[test]
    fn zero_argument_allowed_for_plain_slots() {
        let z = fmp_harmonic(&idx(&[2, 1]), &[rat_int(0), rat_int(1)], 7, 2, false).unwrap();
        assert_eq!(z, res(0, 7, 2));
        let z2 = fast_nested_eval(&idx(&[3]), &rat_int(0), 11, 1, true, End::Head).unwrap();
        assert_eq!(z2, res(0, 11, 1));
        // shuffle requires units
        assert!(fmp_shuffle(&idx(&[1, 1]), &[rat_int(0), rat_int(1)], 7, 1, false).is_err());
    }

    #[test]
    fn fast_matches_naive_randomized() {
        let mut rng = StdRng::seed_from_u64(20240824);
        let primes = primes_in(2, 31);
        for trial in 0..200 {
            let p = primes[rng.gen_range(0..primes.len())];
            let depth = rng.gen_range(1..=3);
            let mut parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=3)).collect();
            while parts.iter().sum::<u32>() > 6 {
                parts.pop();
            }
            if parts.is_empty() {
                parts.push(1);
            }
            let k = idx(&parts);
            let star = rng.gen();
            let end = if rng.gen() { End::Head } else { End::Tail };
            let n = rng.gen_range(1..=2);
            let t = rat(rng.gen_range(-5..=5), rng.gen_range(1..=5));
            if !is_p_integral(&t, p) {
                continue;
            }
            let fast = fast_nested_eval(&k, &t, p, n, star, end).unwrap();
            let slow = fmp_one_var(&k, &t, p, n, star, end).unwrap();
            assert_eq!(
                fast, slow,
                "trial {trial}: p={p} kk={k} star={star} end={end:?}"
            );
        }
    }

    #[test]
    fn oy_examples() {
        assert_eq!(
            oy_li(&idx(&[1, 1]), &rat_int(1), 7, 1).unwrap(),
            res(0, 7, 1)
        );
        assert_eq!(oy_li(&idx(&[1]), &rat_int(1), 5, 1).unwrap(), res(0, 5, 1));
        // depth 1 coincides with the head form
        for p in primes_in(3, 13) {
            for t in [rat_int(2), rat(1, 2), rat_int(-1)] {
                if !is_p_unit(&t, p) {
                    continue;
                }
                assert_eq!(
                    oy_li(&idx(&[3]), &t, p, 1).unwrap(),
                    fmp_one_var(&idx(&[3]), &t, p, 1, false, End::Head).unwrap()
                );
            }
        }
    }

    #[test]
    fn phi_enumeration() {
        let phi1 = enumerate_phi(1).unwrap();
        assert_eq!(phi1.len(), 1);
        assert_eq!(phi1[0].beta, 1);
        let phi2 = enumerate_phi(2).unwrap();
        assert_eq!(phi2.len(), 2); // (1,2) and (2,1), both onto [2]
        let betas: Vec<usize> = phi2.iter().map(|f| f.beta).collect();
        assert!(betas.contains(&1) && betas.contains(&2));
        // surjective injections: the l = m layer has m! maps
        for m in 1..=5 {
            let full = enumerate_phi(m)
                .unwrap()
                .into_iter()
                .filter(|f| f.parts == m)
                .count();
            assert_eq!(full, (1..=m).product::<usize>());
        }
        assert!(enumerate_phi(7).is_err());
        assert!(enumerate_phi(0).is_err());
    }

    #[test]
    fn oy_decomposition_matches_direct() {
        for p in primes_in(3, 31) {
            for parts in [
                vec![1u32, 1],
                vec![2, 1],
                vec![1, 2],
                vec![1, 1, 1],
                vec![2, 1, 1],
            ] {
                let k = idx(&parts);
                for t in [rat_int(-1), rat_int(2), rat(1, 2), rat_int(3)] {
                    if !is_p_unit(&t, p) {
                        continue;
                    }
                    let direct = oy_li(&k, &t, p, 1).unwrap();
                    let decomposed = oy_decompose(&k, &t, p, 1).unwrap();
                    assert_eq!(direct, decomposed, "p={p} kk={k} t={t}");
                }
            }
        }
    }

    #[test]
    fn oy_depth2_closed_decomposition() {
        // depth 2: li_(k1,k2)(t) = head_(k2,k1)(t) + t^p tail_(k1,k2)(t)
        for p in primes_in(3, 23) {
            for (k1, k2) in [(1u32, 1u32), (1, 2), (2, 1), (2, 3)] {
                for t in [rat_int(2), rat(1, 2), rat_int(-1)] {
                    if !is_p_unit(&t, p) {
                        continue;
                    }
                    let li = oy_li(&idx(&[k1, k2]), &t, p, 1).unwrap();
                    let head = fmp_one_var(&idx(&[k2, k1]), &t, p, 1, false, End::Head).unwrap();
                    let tail = fmp_one_var(&idx(&[k1, k2]), &t, p, 1, false, End::Tail).unwrap();
                    let tp = crate::modular::reduce_rational(&t, p, 1).unwrap().pow(p);
                    assert_eq!(li, head + tp * tail, "p={p} k=({k1},{k2}) t={t}");
                }
            }
        }
    }

    #[test]
    fn shuffle_ratio_conversion_matches_naive() {
        let mut rng = StdRng::seed_from_u64(31337);
        let primes = primes_in(3, 19);
        for _ in 0..120 {
            let p = primes[rng.gen_range(0..primes.len())];
            let depth = rng.gen_range(1..=3);
            let parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=3)).collect();
            let k = idx(&parts);
            let star = rng.gen();
            let n = rng.gen_range(1..=2);
            let args: Vec<ResidueValue> = (0..depth)
                .map(|_| ResidueValue::new(rng.gen_range(1..p) as i128, p, n))
                .collect();
            let fast = fmp_shuffle_res(&k, &args, p, n, star).unwrap();
            let slow = naive::shuffle_multi(k.parts(), &args, p, n, star).unwrap();
            assert_eq!(fast, slow, "p={p} kk={k} star={star}");
        }
    }

    #[test]
    fn eval_request_arity_and_dispatch() {
        let req = EvalRequest {
            index: idx(&[2, 1]),
            arguments: vec![],
            star: false,
            flavor: Flavor::Zeta,
            prime: 7,
            exponent: 1,
        };
        assert_eq!(req.evaluate().unwrap(), res(3, 7, 1));
        let bad = EvalRequest {
            arguments: vec![rat_int(2)],
            ..req.clone()
        };
        assert!(bad.evaluate().is_err());
        let head = EvalRequest {
            index: idx(&[1]),
            arguments: vec![rat(1, 2)],
            star: false,
            flavor: Flavor::Head,
            prime: 5,
            exponent: 1,
        };
        assert_eq!(head.evaluate().unwrap(), res(3, 5, 1));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rational(" 5/2 ").unwrap(), rat(5, 2));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
