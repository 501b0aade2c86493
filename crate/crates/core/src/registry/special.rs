//! One-variable special values at -1, 2, and 1/2: Bernoulli-number closed
//! forms at exponent 1 and 2, and the Fermat-quotient-of-2 family at low
//! weight.

use super::*;
use crate::eval::{fast_nested_eval, half_range_power_sum, mhs, End};

fn hook(k1: i64, k2: i64) -> Index {
    let mut parts = vec![1u32; (k1 - 1) as usize];
    parts.push(2);
    parts.extend(vec![1u32; (k2 - 1) as usize]);
    Index::new(parts)
}

fn head(k: &Index, t: &Rational, p: u64, n: u8, star: bool) -> ModResult<ResidueValue> {
    fast_nested_eval(k, t, p, n, star, End::Head)
}

fn tail(k: &Index, t: &Rational, p: u64, n: u8, star: bool) -> ModResult<ResidueValue> {
    fast_nested_eval(k, t, p, n, star, End::Tail)
}

fn odd_pairs(max_w: i64) -> Vec<Params> {
    let mut g = Vec::new();
    for k1 in 1..=max_w - 1 {
        for k2 in 1..=max_w - k1 {
            if (k1 + k2) % 2 == 1 {
                g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
            }
        }
    }
    g
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // L_m(-1) mod p, m >= 2
    out.push(
        Builder::closed(
            "sv.m.neg1",
            1,
            "L_m(-1) = (1-2^(m-1))/2^(m-2) B(p-m)/m (mod p)",
        )
        .guard_text("p > m+1")
        .grid((2..=6).map(|m| Params::new().with_int("m", m)).collect())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let lhs = head(&Index::single(m as u32), &rat_int(-1), p, 1, false)?;
            let rhs_rat = (rat_int(1) - pow2(m - 1)) / pow2(m - 2) * bb(p as i64 - m) / rat_int(m);
            Ok(one_pair(lhs, rr(&rhs_rat, p, 1)?))
        }),
    );

    // depth-2 at -1 mod p, w odd: head = tail, and the star forms negate
    out.push(
        Builder::closed(
            "sv.dep2.neg1",
            1,
            "L(k1,k2;-1) = Ltail(k1,k2;-1) = (2^(w-1)-1)/2^(w-1) B(p-w)/w; star forms carry the opposite sign (mod p)",
        )
        .guard_text("p > w+1")
        .grid(odd_pairs(7))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(move |pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = Index::new(vec![k1 as u32, k2 as u32]);
            let v = rr(
                &((pow2(w - 1) - rat_int(1)) / pow2(w - 1) * bb(p as i64 - w) / rat_int(w)),
                p,
                1,
            )?;
            let t = rat_int(-1);
            Ok(vec![
                label("head", head(&idx, &t, p, 1, false)?, v),
                label("tail", tail(&idx, &t, p, 1, false)?, v),
                label("head.star", head(&idx, &t, p, 1, true)?, -v),
                label("tail.star", tail(&idx, &t, p, 1, true)?, -v),
            ])
        }),
    );

    // L_{m}(-1) mod p^2
    // NOTE: for even m the tabulated coefficient is printed against Bh(p-m-1)
    // but the derivation substitutes B(p-m-1)/(m+1); the two differ by sign
    // mod p and only the latter matches the sums.
    out.push(
        Builder::closed(
            "sv.a2.m.neg1",
            2,
            "L_m(-1) mod p^2: m(2^m-1)/2^m B(p-m-1)/(m+1) p for even m; (2^(m-1)-1)/2^(m-2) (2 Bh(p-m) - Bh(2p-m-1)) for odd m",
        )
        .guard_text("p > m+2")
        .grid((2..=6).map(|m| Params::new().with_int("m", m)).collect())
        .guard(|pr| (pr.int("m") + 2) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let pl = p as i64;
            let lhs = head(&Index::single(m as u32), &rat_int(-1), p, 2, false)?;
            let rhs_rat = if m % 2 == 0 {
                rat_int(m) * (pow2(m) - rat_int(1)) / pow2(m) * bb(pl - m - 1)
                    / rat_int(m + 1)
                    * pint(p)
            } else {
                (pow2(m - 1) - rat_int(1)) / pow2(m - 2)
                    * (rat_int(2) * bh(pl - m) - bh(2 * pl - m - 1))
            };
            Ok(one_pair(lhs, rr(&rhs_rat, p, 2)?))
        }),
    );

    // depth-2 at -1 mod p^2.
    // NOTE: only the weight-3 cases hold. The general-w closed form one
    // finds quoted for these sums silently applies the mod-p reversal at
    // mod-p^2 scope; the dropped correction p * sum k_i (even-weight tail
    // values at -1) is nonzero from weight 5 on (e.g. (2,3) and (3,2) fail
    // at every p in 11..23). The grid pins the valid cases.
    out.push(
        Builder::closed(
            "sv.a2.dep2.neg1",
            2,
            "weight-3 depth-2 values at -1 mod p^2: main (2 Bh(p-3) - Bh(2p-4)) block (the higher-weight printed forms fail)",
        )
        .guard_text("p > 5")
        .grid(vec![Params::new()])
        .guard(|_| 5)
        .eval(move |_, _, p| {
            let pl = p as i64;
            let main = |sign: i64| {
                rat_int(sign) * (rat_int(1) - pow2(2)) / pow2(2)
                    * (rat_int(2) * bh(pl - 3) - bh(2 * pl - 4))
            };
            // (2,1): correction vanishes since B(p-2) = 0
            let idx21 = Index::new(vec![2, 1]);
            let idx12 = Index::new(vec![1, 2]);
            let t = rat_int(-1);
            Ok(vec![
                label("head21", head(&idx21, &t, p, 2, false)?, rr(&main(1), p, 2)?),
                label(
                    "head21.star",
                    head(&idx21, &t, p, 2, true)?,
                    rr(&main(-1), p, 2)?,
                ),
                label("tail12", tail(&idx12, &t, p, 2, false)?, rr(&main(1), p, 2)?),
                label(
                    "tail12.star",
                    tail(&idx12, &t, p, 2, true)?,
                    rr(&main(-1), p, 2)?,
                ),
            ])
        }),
    );

    // splitting relation through the half-range power sum, any exponent
    out.push(
        Builder::closed(
            "sv.split.half",
            3,
            "L_m(-1) = -zeta(m) + 2^(1-m) sum_(k<=(p-1)/2) k^(-m) (mod p^n)",
        )
        .guard_text("p > 2")
        .grid({
            let mut g = Vec::new();
            for m in 1..=4i64 {
                for n in 1..=3i64 {
                    g.push(Params::new().with_int("m", m).with_int("n", n));
                }
            }
            g
        })
        .guard(|_| 2)
        .eval(move |pr, _, p| {
            let (m, n) = (pr.int("m"), pr.int("n") as u8);
            let lhs = head(&Index::single(m as u32), &rat_int(-1), p, n, false)?;
            let rhs = -mhs(&Index::single(m as u32), p, n, false)
                + rr(&pow2(1 - m), p, n)? * half_range_power_sum(m as u32, p, n)?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // {1}^m at 2 and 1/2, mod p
    out.push(
        Builder::closed(
            "sv.ones.two",
            1,
            "L({1}^m;2) = Ltail*({1}^m;2) = (1-2^(m-1))/2^(m-2) B(p-m)/m (mod p)",
        )
        .guard_text("p > m+1")
        .grid((2..=6).map(|m| Params::new().with_int("m", m)).collect())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let idx = Index::repeat(1, m as usize);
            let v = rr(
                &((rat_int(1) - pow2(m - 1)) / pow2(m - 2) * bb(p as i64 - m) / rat_int(m)),
                p,
                1,
            )?;
            Ok(vec![
                label("head", head(&idx, &rat_int(2), p, 1, false)?, v),
                label("tail.star", tail(&idx, &rat_int(2), p, 1, true)?, v),
            ])
        }),
    );

    out.push(
        Builder::closed(
            "sv.ones.half",
            1,
            "Ltail({1}^m;1/2) = L*({1}^m;1/2) = (2^(m-1)-1)/2^(m-1) B(p-m)/m (mod p)",
        )
        .guard_text("p > m+1")
        .grid((2..=6).map(|m| Params::new().with_int("m", m)).collect())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let idx = Index::repeat(1, m as usize);
            let v = rr(
                &((pow2(m - 1) - rat_int(1)) / pow2(m - 1) * bb(p as i64 - m) / rat_int(m)),
                p,
                1,
            )?;
            Ok(vec![
                label("tail", tail(&idx, &rat(1, 2), p, 1, false)?, v),
                label("head.star", head(&idx, &rat(1, 2), p, 1, true)?, v),
            ])
        }),
    );

    // hook index ({1}^(k1-1), 2, {1}^(k2-1)) at 2 and 1/2, w odd, mod p
    out.push(
        Builder::closed(
            "sv.hook.two",
            1,
            "hook-index values at 2 and 1/2: {(2^(w-1)-1)/2^(w-1) -+ (-1)^k1 C(w,k1)} B(p-w)/w patterns (mod p)",
        )
        .guard_text("p > w+1")
        .grid(odd_pairs(7))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(move |pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = hook(k1, k2);
            let b = bb(p as i64 - w) / rat_int(w);
            let s1 = if k1 % 2 == 0 { 1 } else { -1 };
            let plus = (pow2(w - 1) - rat_int(1)) / pow2(w - 1);
            let minus = (rat_int(1) - pow2(w - 1)) / pow2(w - 1);
            let c = rat_int(s1) * binc(w, k1);
            Ok(vec![
                label(
                    "head@2",
                    head(&idx, &rat_int(2), p, 1, false)?,
                    rr(&((plus.clone() - c.clone()) * b.clone()), p, 1)?,
                ),
                label(
                    "tail.star@2",
                    tail(&idx, &rat_int(2), p, 1, true)?,
                    rr(&((minus.clone() - c.clone()) * b.clone()), p, 1)?,
                ),
                label(
                    "tail@1/2",
                    tail(&idx, &rat(1, 2), p, 1, false)?,
                    rr(&((minus - c.clone()) * b.clone() / rat_int(2)), p, 1)?,
                ),
                label(
                    "head.star@1/2",
                    head(&idx, &rat(1, 2), p, 1, true)?,
                    rr(&((plus - c) * b / rat_int(2)), p, 1)?,
                ),
            ])
        }),
    );

    // {1}^m at 2 and 1/2 mod p^2, m even
    out.push(
        Builder::closed(
            "sv.a2.ones.two",
            2,
            "L({1}^m;2) = -Ltail*({1}^m;2) = ((m+1)/2^m - m - 2) B(p-m-1)/(m+1) p (mod p^2), m even",
        )
        .guard_text("p > m+2")
        .grid((1..=3).map(|j| Params::new().with_int("m", 2 * j)).collect())
        .guard(|pr| (pr.int("m") + 2) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let idx = Index::repeat(1, m as usize);
            let v = rr(
                &((rat_int(m + 1) / pow2(m) - rat_int(m + 2))
                    * bb(p as i64 - m - 1)
                    / rat_int(m + 1)
                    * pint(p)),
                p,
                2,
            )?;
            Ok(vec![
                label("head", head(&idx, &rat_int(2), p, 2, false)?, v),
                label("tail.star", tail(&idx, &rat_int(2), p, 2, true)?, -v),
            ])
        }),
    );

    out.push(
        Builder::closed(
            "sv.a2.ones.half",
            2,
            "Ltail({1}^m;1/2) = -L*({1}^m;1/2) = (1-2^(m+1))/2^(m+1) B(p-m-1)/(m+1) p (mod p^2), m even",
        )
        .guard_text("p > m+2")
        .grid((1..=3).map(|j| Params::new().with_int("m", 2 * j)).collect())
        .guard(|pr| (pr.int("m") + 2) as u64)
        .eval(move |pr, _, p| {
            let m = pr.int("m");
            let idx = Index::repeat(1, m as usize);
            let v = rr(
                &((rat_int(1) - pow2(m + 1)) / pow2(m + 1) * bb(p as i64 - m - 1)
                    / rat_int(m + 1)
                    * pint(p)),
                p,
                2,
            )?;
            Ok(vec![
                label("tail", tail(&idx, &rat(1, 2), p, 2, false)?, v),
                label("head.star", head(&idx, &rat(1, 2), p, 2, true)?, -v),
            ])
        }),
    );

    // ---- Fermat-quotient family ----

    // the depth-1 index (1) at exponent 3
    out.push(
        Builder::closed(
            "sv.fq.depth1.mod3",
            3,
            "L_1 at -1, 2, 1/2 mod p^3 through q = q_p(2) and B(p-3)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (neg1, two, half) = (rat_int(-1), rat_int(2), rat(1, 2));
            let one = Index::single(1);
            let q = q2(p, 3)?;
            let b = rr(&bb(p as i64 - 3), p, 3)?;
            let pr3 = ResidueValue::new(p as i128, p, 3);
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 3);
            // at -1: -2q + q^2 p - (2/3 q^3 + B/4) p^2
            let rhs_neg1 =
                -(q + q) + q * q * pr3 - (c(2, 3)? * q.pow(3) + c(1, 4)? * b) * pr3 * pr3;
            // at 2: -2q - 7/12 B p^2
            let rhs_two = -(q + q) - c(7, 12)? * b * pr3 * pr3;
            // at 1/2: q - q^2/2 p + (q^3/3 - 7/48 B) p^2
            let rhs_half =
                q - c(1, 2)? * q * q * pr3 + (c(1, 3)? * q.pow(3) - c(7, 48)? * b) * pr3 * pr3;
            Ok(vec![
                label("@-1", head(&one, &neg1, p, 3, false)?, rhs_neg1),
                label("@2", head(&one, &two, p, 3, false)?, rhs_two),
                label("@1/2", head(&one, &half, p, 3, false)?, rhs_half),
            ])
        }),
    );

    // the depth-1 index (2) at exponent 2
    out.push(
        Builder::closed(
            "sv.fq.depth1.mod2",
            2,
            "L_2 at 2 and 1/2 mod p^2 through q and B(p-3)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (two, half) = (rat_int(2), rat(1, 2));
            let idx = Index::single(2);
            let q = q2(p, 2)?;
            let b = rr(&bb(p as i64 - 3), p, 2)?;
            let pr2 = ResidueValue::new(p as i128, p, 2);
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 2);
            let rhs_two = -(q * q) + (c(2, 3)? * q.pow(3) + c(7, 6)? * b) * pr2;
            let rhs_half = -(c(1, 2)? * q * q) + (c(1, 2)? * q.pow(3) + c(7, 24)? * b) * pr2;
            Ok(vec![
                label("@2", head(&idx, &two, p, 2, false)?, rhs_two),
                label("@1/2", head(&idx, &half, p, 2, false)?, rhs_half),
            ])
        }),
    );

    // the depth-1 index (3) at exponent 1
    out.push(
        Builder::closed(
            "sv.fq.depth1.mod1",
            1,
            "L_3 at 2 and 1/2 mod p through q and B(p-3)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (two, half) = (rat_int(2), rat(1, 2));
            let idx = Index::single(3);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let rhs_two = -(c(1, 3)? * q.pow(3)) - c(7, 24)? * b;
            let rhs_half = c(1, 6)? * q.pow(3) + c(7, 48)? * b;
            Ok(vec![
                label("@2", head(&idx, &two, p, 1, false)?, rhs_two),
                label("@1/2", head(&idx, &half, p, 1, false)?, rhs_half),
            ])
        }),
    );

    // weight-2 values mod p^2
    out.push(
        Builder::closed(
            "sv.fq.ones2",
            2,
            "{1}^2 values at -1, 2, 1/2 mod p^2 through q and B(p-3)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (neg1, two, half) = (rat_int(-1), rat_int(2), rat(1, 2));
            let idx = Index::repeat(1, 2);
            let q = q2(p, 2)?;
            let b = rr(&bb(p as i64 - 3), p, 2)?;
            let pr2 = ResidueValue::new(p as i128, p, 2);
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 2);
            let v1 = q * q - (q.pow(3) + c(13, 24)? * b) * pr2;
            let v2 = q * q - (q.pow(3) + c(1, 24)? * b) * pr2;
            let v3 = -(q * q) + (c(2, 3)? * q.pow(3) + c(1, 12)? * b) * pr2;
            let v4 = c(1, 2)? * q * q - c(1, 2)? * q.pow(3) * pr2;
            Ok(vec![
                label("head@-1", head(&idx, &neg1, p, 2, false)?, v1),
                label("tail.star@-1", tail(&idx, &neg1, p, 2, true)?, -v1),
                label("head.star@-1", head(&idx, &neg1, p, 2, true)?, v2),
                label("tail@-1", tail(&idx, &neg1, p, 2, false)?, -v2),
                label("head.star@2", head(&idx, &two, p, 2, true)?, v3),
                label("tail@2", tail(&idx, &two, p, 2, false)?, -v3),
                label("head@1/2", head(&idx, &half, p, 2, false)?, v4),
                label("tail.star@1/2", tail(&idx, &half, p, 2, true)?, -v4),
            ])
        }),
    );

    // weight-3 depth-2 values mod p
    out.push(
        Builder::closed(
            "sv.fq.dep2",
            1,
            "(1,2)/(2,1) values at 2 and 1/2 mod p through q^3 and B(p-3)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (two, half) = (rat_int(2), rat(1, 2));
            let i12 = Index::new(vec![1, 2]);
            let i21 = Index::new(vec![2, 1]);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let va = -(c(1, 3)? * q.pow(3)) - c(25, 24)? * b;
            let vb = -(c(1, 6)? * q.pow(3)) - c(25, 48)? * b;
            let vc = -(c(1, 3)? * q.pow(3)) + c(23, 24)? * b;
            let vd = -(c(1, 6)? * q.pow(3)) + c(23, 48)? * b;
            Ok(vec![
                label("star12@2", head(&i12, &two, p, 1, true)?, va),
                label("tail21@2", tail(&i21, &two, p, 1, false)?, -va),
                label("head12@1/2", head(&i12, &half, p, 1, false)?, vb),
                label("tail21.star@1/2", tail(&i21, &half, p, 1, true)?, -vb),
                label("star21@2", head(&i21, &two, p, 1, true)?, vc),
                label("tail12@2", tail(&i12, &two, p, 1, false)?, -vc),
                label("head21@1/2", head(&i21, &half, p, 1, false)?, vd),
                label("tail12.star@1/2", tail(&i12, &half, p, 1, true)?, -vd),
            ])
        }),
    );

    // weight-3 all-ones values mod p
    out.push(
        Builder::closed(
            "sv.fq.ones3",
            1,
            "{1}^3 values at -1, 2, 1/2 mod p: -(q^3)/3 - 7/24 B(p-3) family",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(move |_, _, p| {
            let (neg1, two, half) = (rat_int(-1), rat_int(2), rat(1, 2));
            let idx = Index::repeat(1, 3);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let v = -(c(1, 3)? * q.pow(3)) - c(7, 24)? * b;
            let vh = c(1, 6)? * q.pow(3) + c(7, 48)? * b;
            Ok(vec![
                label("head@-1", head(&idx, &neg1, p, 1, false)?, v),
                label("tail@-1", tail(&idx, &neg1, p, 1, false)?, v),
                label("head.star@-1", head(&idx, &neg1, p, 1, true)?, v),
                label("tail.star@-1", tail(&idx, &neg1, p, 1, true)?, v),
                label("head.star@2", head(&idx, &two, p, 1, true)?, v),
                label("tail@2", tail(&idx, &two, p, 1, false)?, v),
                label("head@1/2", head(&idx, &half, p, 1, false)?, vh),
                label("tail.star@1/2", tail(&idx, &half, p, 1, true)?, vh),
            ])
        }),
    );

    // weight-4 values mod p
    out.push(
        Builder::closed(
            "sv.w4",
            1,
            "weight-4 values at -1, 2, 1/2: (1,3)/(3,1) and (2,1,1)/(1,1,2) through q B(p-3) (mod p)",
        )
        .guard_text("p > 5")
        .grid(vec![Params::new()])
        .guard(|_| 5)
        .eval(move |_, _, p| {
            let (neg1, two, half) = (rat_int(-1), rat_int(2), rat(1, 2));
            let i13 = Index::new(vec![1, 3]);
            let i31 = Index::new(vec![3, 1]);
            let i211 = Index::new(vec![2, 1, 1]);
            let i112 = Index::new(vec![1, 1, 2]);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let v = c(1, 2)? * q * b;
            let mut checks = vec![
                label("head13@-1", head(&i13, &neg1, p, 1, false)?, v),
                label("head13.star@-1", head(&i13, &neg1, p, 1, true)?, v),
                label("tail31@-1", tail(&i31, &neg1, p, 1, false)?, -v),
                label("tail31.star@-1", tail(&i31, &neg1, p, 1, true)?, -v),
            ];
            checks.push(label("head211@2", head(&i211, &two, p, 1, false)?, -v));
            checks.push(label(
                "tail112.star@2",
                tail(&i112, &two, p, 1, true)?,
                -v,
            ));
            let vq = -(c(1, 4)? * q * b);
            checks.push(label(
                "head211.star@1/2",
                head(&i211, &half, p, 1, true)?,
                vq,
            ));
            checks.push(label("tail112@1/2", tail(&i112, &half, p, 1, false)?, vq));
            Ok(checks)
        }),
    );

    out
}
