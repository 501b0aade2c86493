//! Multi-variable values at arguments drawn from {-1, 1}: depth 2 and 3 at
//! exponent 1, and the exponent-2 refinements for even entries and for the
//! all-ones index.

use super::*;
use crate::eval::fmp_harmonic;

fn harg(vals: &[i64]) -> Vec<Rational> {
    vals.iter().map(|&v| rat_int(v)).collect()
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // depth-2 at (-1,-1), w odd: (-1)^k1 (1-2^(w-1))/2^(w-1) C(w,k1) B(p-w)/w
    out.push(
        Builder::closed(
            "alt.dep2.odd",
            1,
            "L*•(k1,k2;-1,-1) = (-1)^k1 (1-2^(w-1))/2^(w-1) C(w,k1) B(p-w)/w (mod p), w odd, both flavors",
        )
        .guard_text("p > k1+k2+1")
        .grid({
            let mut g = Vec::new();
            for k1 in 1..=5i64 {
                for k2 in 1..=5i64 {
                    if (k1 + k2) % 2 == 1 && k1 + k2 <= 7 {
                        g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                    }
                }
            }
            g
        })
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = Index::new(vec![k1 as u32, k2 as u32]);
            let sign = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &(rat_int(sign) * (rat_int(1) - pow2(w - 1)) / pow2(w - 1)
                    * binc(w, k1)
                    * bb(p as i64 - w)
                    / rat_int(w)),
                p,
                1,
            )?;
            let args = harg(&[-1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &args, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &args, p, 1, true)?, rhs),
            ])
        }),
    );

    // depth-2 at (-1,-1), w even, k1,k2 >= 2: product of two Bernoulli rows
    out.push(
        Builder::closed(
            "alt.dep2.even",
            1,
            "L*•(k1,k2;-1,-1) = (2^(k1-1)-1)(2^(k2-1)-1)/(2^(w-3) k1 k2) B(p-k1) B(p-k2) (mod p), w even, k1,k2 >= 2",
        )
        .guard_text("p > k1+k2+1")
        .grid({
            let mut g = Vec::new();
            for k1 in 2..=5i64 {
                for k2 in 2..=5i64 {
                    if (k1 + k2) % 2 == 0 && k1 + k2 <= 7 {
                        g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                    }
                }
            }
            g
        })
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = Index::new(vec![k1 as u32, k2 as u32]);
            let rhs = rr(
                &((pow2(k1 - 1) - rat_int(1)) * (pow2(k2 - 1) - rat_int(1))
                    / (pow2(w - 3) * rat_int(k1 * k2))
                    * bb(p as i64 - k1)
                    * bb(p as i64 - k2)),
                p,
                1,
            )?;
            let args = harg(&[-1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &args, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &args, p, 1, true)?, rhs),
            ])
        }),
    );

    // (m,1) and (1,m) at (-1,-1), m odd >= 3: Fermat-quotient times Bernoulli
    out.push(
        Builder::closed(
            "alt.dep2.unit",
            1,
            "L*•(m,1;-1,-1) = L*•(1,m;-1,-1) = (2^(m-1)-1)/(2^(m-2) m) q_p(2) B(p-m) (mod p), m odd >= 3",
        )
        .guard_text("p > m+2")
        .grid(
            [3i64, 5]
                .into_iter()
                .map(|m| Params::new().with_int("m", m))
                .collect(),
        )
        .guard(|pr| (pr.int("m") + 2) as u64)
        .eval(|pr, _, p| {
            let m = pr.int("m");
            let q = q2(p, 1)?;
            let rhs = rr(
                &((pow2(m - 1) - rat_int(1)) / (pow2(m - 2) * rat_int(m)) * bb(p as i64 - m)),
                p,
                1,
            )? * q;
            let a = harg(&[-1, -1]);
            let im1 = Index::new(vec![m as u32, 1]);
            let i1m = Index::new(vec![1, m as u32]);
            Ok(vec![
                label("m1", fmp_harmonic(&im1, &a, p, 1, false)?, rhs),
                label("m1.star", fmp_harmonic(&im1, &a, p, 1, true)?, rhs),
                label("1m", fmp_harmonic(&i1m, &a, p, 1, false)?, rhs),
                label("1m.star", fmp_harmonic(&i1m, &a, p, 1, true)?, rhs),
            ])
        }),
    );

    // depth-3 at (-1,-1,1), k1 even, k2+k3 odd
    out.push(
        Builder::closed(
            "alt.dep3.mm1",
            1,
            "L*(k1,k2,k3;-1,-1,1) = -L**(..) = 1/2 {(-1)^k3 C(w,k3) - (1-2^(w-1))/2^(w-1) C(w,k1)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .cap(101)
        .grid(dep3_grid(|k1, k2, k3| k1 % 2 == 0 && (k2 + k3) % 2 == 1))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let idx = Index::new(vec![k1 as u32, k2 as u32, k3 as u32]);
            let s3 = if k3 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &((rat_int(s3) * binc(w, k3)
                    - (rat_int(1) - pow2(w - 1)) / pow2(w - 1) * binc(w, k1))
                    / rat_int(2)
                    * bb(p as i64 - w)
                    / rat_int(w)),
                p,
                1,
            )?;
            let a = harg(&[-1, -1, 1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &a, p, 1, true)?, -rhs),
            ])
        }),
    );

    // depth-3 at (1,-1,-1), k1+k2 odd, k3 even
    out.push(
        Builder::closed(
            "alt.dep3.1mm",
            1,
            "-L*(k1,k2,k3;1,-1,-1) = L**(..) = 1/2 {(-1)^k1 C(w,k1) - (1-2^(w-1))/2^(w-1) C(w,k3)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .cap(101)
        .grid(dep3_grid(|k1, k2, k3| (k1 + k2) % 2 == 1 && k3 % 2 == 0))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let idx = Index::new(vec![k1 as u32, k2 as u32, k3 as u32]);
            let s1 = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &((rat_int(s1) * binc(w, k1)
                    - (rat_int(1) - pow2(w - 1)) / pow2(w - 1) * binc(w, k3))
                    / rat_int(2)
                    * bb(p as i64 - w)
                    / rat_int(w)),
                p,
                1,
            )?;
            let a = harg(&[1, -1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 1, false)?, -rhs),
                label("star", fmp_harmonic(&idx, &a, p, 1, true)?, rhs),
            ])
        }),
    );

    // depth-3 at (-1,1,-1), k1 even, k2 odd, k3 even
    out.push(
        Builder::closed(
            "alt.dep3.m1m",
            1,
            "L*(k1,k2,k3;-1,1,-1) = -L**(..) = (1-2^(w-1))/2^w {C(w,k3) - C(w,k1)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .cap(101)
        .grid(dep3_grid(|k1, k2, k3| {
            k1 % 2 == 0 && k2 % 2 == 1 && k3 % 2 == 0
        }))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let idx = Index::new(vec![k1 as u32, k2 as u32, k3 as u32]);
            let rhs = rr(
                &((rat_int(1) - pow2(w - 1)) / pow2(w)
                    * (binc(w, k3) - binc(w, k1))
                    * bb(p as i64 - w)
                    / rat_int(w)),
                p,
                1,
            )?;
            let a = harg(&[-1, 1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &a, p, 1, true)?, -rhs),
            ])
        }),
    );

    // {1}^3 at the sign patterns
    out.push(
        Builder::closed(
            "alt.ones3",
            1,
            "{1}^3 at sign patterns: q^3 +- 7/8 B(p-3), zero at (-1,1,-1), -4/3 q^3 - B(p-3)/6 at (-1,-1,-1) (mod p)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(|_, _, p| {
            let idx = Index::repeat(1, 3);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let v78 = q.pow(3) + c(7, 8)? * b;
            let v78s = q.pow(3) - c(7, 8)? * b;
            let vmmm = -(c(4, 3)? * q.pow(3)) - c(1, 6)? * b;
            let zero = ResidueValue::zero(p, 1);
            let e = |vals: &[i64], star: bool| fmp_harmonic(&idx, &harg(vals), p, 1, star);
            Ok(vec![
                label("1mm", e(&[1, -1, -1], false)?, v78),
                label("mm1", e(&[-1, -1, 1], false)?, -v78),
                label("1mm.star", e(&[1, -1, -1], true)?, v78s),
                label("mm1.star", e(&[-1, -1, 1], true)?, -v78s),
                label("m1m", e(&[-1, 1, -1], false)?, zero),
                label("m1m.star", e(&[-1, 1, -1], true)?, zero),
                label("mmm", e(&[-1, -1, -1], false)?, vmmm),
                label("mmm.star", e(&[-1, -1, -1], true)?, vmmm),
                label("1m1.x2", e(&[1, -1, 1], false)?.mul_u64(2), -vmmm),
                label("1m1.star.x2", e(&[1, -1, 1], true)?.mul_u64(2), -vmmm),
            ])
        }),
    );

    // exponent-2 refinements, k1 and k2 even
    out.push(
        Builder::closed(
            "alt.mod2.dep2",
            2,
            "L*•(k1,k2;-1,-1) mod p^2 = {(k2-k1)(2^w-1)/(2^(w+1)(w+2)) C(w+2,k1+1) -+ w/2} B(p-w-1)/(w+1) p, k1,k2 even",
        )
        .guard_text("p > k1+k2+2")
        .grid({
            let mut g = Vec::new();
            for k1 in [2i64, 4] {
                for k2 in [2i64, 4] {
                    if k1 + k2 <= 6 {
                        g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                    }
                }
            }
            g
        })
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 2) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = Index::new(vec![k1 as u32, k2 as u32]);
            let coef = rat_int(k2 - k1) * (pow2(w) - rat_int(1))
                / (pow2(w + 1) * rat_int(w + 2))
                * binc(w + 2, k1 + 1);
            let tail_rat = bb(p as i64 - w - 1) / rat_int(w + 1) * pint(p);
            let rhs_non = rr(&((coef.clone() - rat_int(w) / rat_int(2)) * tail_rat.clone()), p, 2)?;
            let rhs_star = rr(&((coef + rat_int(w) / rat_int(2)) * tail_rat), p, 2)?;
            let a = harg(&[-1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 2, false)?, rhs_non),
                label("star", fmp_harmonic(&idx, &a, p, 2, true)?, rhs_star),
            ])
        }),
    );

    // {1}^2 at (-1,-1) mod p^2
    out.push(
        Builder::closed(
            "alt.mod2.ones2",
            2,
            "L*•({1}^2;-1,-1) = 2q^2 - (2q^3 +- B(p-3)/3) p (mod p^2)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(|_, _, p| {
            let idx = Index::repeat(1, 2);
            let q = q2(p, 2)?;
            let b = rr(&bb(p as i64 - 3), p, 2)?;
            let pr2 = ResidueValue::new(p as i128, p, 2);
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 2);
            let two_q2 = q * q + q * q;
            let rhs_non = two_q2 - (q.pow(3) + q.pow(3) + c(1, 3)? * b) * pr2;
            let rhs_star = two_q2 - (q.pow(3) + q.pow(3) - c(1, 3)? * b) * pr2;
            let a = harg(&[-1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 2, false)?, rhs_non),
                label("star", fmp_harmonic(&idx, &a, p, 2, true)?, rhs_star),
            ])
        }),
    );

    // {1}^3 at (-1,-1,-1) mod p^2
    out.push(
        Builder::closed(
            "alt.mod2.ones3",
            2,
            "L*•({1}^3;-1,-1,-1) = -4/3 q^3 + Bh(p-3) - Bh(2p-4)/2 + 2(q^4 -+ q Bh(p-3)) p (mod p^2)",
        )
        .guard_text("p > 5")
        .grid(vec![Params::new()])
        .guard(|_| 5)
        .eval(|_, _, p| {
            let idx = Index::repeat(1, 3);
            let pl = p as i64;
            let q = q2(p, 2)?;
            let bh3 = rr(&bh(pl - 3), p, 2)?;
            let bh4 = rr(&bh(2 * pl - 4), p, 2)?;
            let pr2 = ResidueValue::new(p as i128, p, 2);
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 2);
            let main = -(c(4, 3)? * q.pow(3)) + bh3 - c(1, 2)? * bh4;
            let rhs_non = main + (q.pow(4) - q * bh3).mul_u64(2) * pr2;
            let rhs_star = main + (q.pow(4) + q * bh3).mul_u64(2) * pr2;
            let a = harg(&[-1, -1, -1]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a, p, 2, false)?, rhs_non),
                label("star", fmp_harmonic(&idx, &a, p, 2, true)?, rhs_star),
            ])
        }),
    );

    out
}

fn dep3_grid(cond: impl Fn(i64, i64, i64) -> bool) -> Vec<Params> {
    let mut g = Vec::new();
    for k1 in 1..=4i64 {
        for k2 in 1..=4i64 {
            for k3 in 1..=4i64 {
                if k1 + k2 + k3 <= 7 && cond(k1, k2, k3) {
                    g.push(
                        Params::new()
                            .with_int("k1", k1)
                            .with_int("k2", k2)
                            .with_int("k3", k3),
                    );
                }
            }
        }
    }
    g
}
