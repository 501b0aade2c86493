//! Multi-variable values with arguments drawn from {1, 2, 1/2}: the all-ones
//! index with 1/2,2 insertions, the hook-index variants, and their
//! exponent-2 refinements.

use super::*;
use crate::eval::fmp_harmonic;

/// argument vector over {1}^w with replacements at given 1-based slots
fn slots(w: usize, repl: &[(usize, Rational)]) -> Vec<Rational> {
    let mut a = vec![rat_int(1); w];
    for (pos, v) in repl {
        a[pos - 1] = v.clone();
    }
    a
}

fn ones(w: i64) -> Index {
    Index::repeat(1, w as usize)
}

fn h() -> Rational {
    rat(1, 2)
}

fn two() -> Rational {
    rat_int(2)
}

fn bw(p: u64, w: i64) -> Rational {
    bb(p as i64 - w) / rat_int(w)
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // nonstar {1}^w at ({1}^(k1-1), 1/2, 2, {1}^(k2-1)): odd w closed form,
    // even w vanishing
    out.push(
        Builder::closed(
            "mv.half2",
            1,
            "L*({1}^w; {1}^(k1-1),1/2,2,{1}^(k2-1)) = (-1)^k1 (1-2^(w-1))/2^(w-1) C(w,k1) B(p-w)/w for odd w, 0 for even w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |_, _| true))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(w as usize, &[(k1 as usize, h()), (k1 as usize + 1, two())]);
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, false)?;
            let rhs = if w % 2 == 1 {
                let sign = if k1 % 2 == 0 { 1 } else { -1 };
                rr(
                    &(rat_int(sign) * (rat_int(1) - pow2(w - 1)) / pow2(w - 1)
                        * binc(w, k1)
                        * bw(p, w)),
                    p,
                    1,
                )?
            } else {
                ResidueValue::zero(p, 1)
            };
            Ok(one_pair(lhs, rhs))
        }),
    );

    // star {1}^w at ({1}^(k1-1), 2, 1/2, {1}^(k2-1)): odd w closed form;
    // even w with k1,k2 >= 2 the Bernoulli product
    out.push(
        Builder::closed(
            "mv.2half.star",
            1,
            "L**({1}^w; {1}^(k1-1),2,1/2,{1}^(k2-1)): (-1)^k1 (2^(w-1)-1)/2^(w-1) C(w,k1) B(p-w)/w for odd w; -(2^(k1-1)-1)(2^(k2-1)-1)/(2^(w-3) k1 k2) B(p-k1)B(p-k2) for even w, k1,k2 >= 2 (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |k1, k2| {
            (k1 + k2) % 2 == 1 || (k1 >= 2 && k2 >= 2)
        }))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(w as usize, &[(k1 as usize, two()), (k1 as usize + 1, h())]);
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, true)?;
            let rhs_rat = if w % 2 == 1 {
                let sign = if k1 % 2 == 0 { 1 } else { -1 };
                rat_int(sign) * (pow2(w - 1) - rat_int(1)) / pow2(w - 1) * binc(w, k1) * bw(p, w)
            } else {
                -((pow2(k1 - 1) - rat_int(1)) * (pow2(k2 - 1) - rat_int(1))
                    / (pow2(w - 3) * rat_int(k1 * k2))
                    * bb(p as i64 - k1)
                    * bb(p as i64 - k2))
            };
            Ok(one_pair(lhs, rr(&rhs_rat, p, 1)?))
        }),
    );

    // star {1}^(m+1) with the 2,1/2 block at either end, m odd >= 3
    out.push(
        Builder::closed(
            "mv.qb.star",
            1,
            "L**({1}^(m+1); {1}^(m-1),2,1/2) = L**({1}^(m+1); 2,1/2,{1}^(m-1)) = (1-2^(m-1))/(2^(m-2) m) q_p(2) B(p-m) (mod p), m odd >= 3",
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
            let w = (m + 1) as usize;
            let q = q2(p, 1)?;
            let rhs = rr(
                &((rat_int(1) - pow2(m - 1)) / (pow2(m - 2) * rat_int(m)) * bb(p as i64 - m)),
                p,
                1,
            )? * q;
            let a1 = slots(w, &[(w - 1, two()), (w, h())]);
            let a2 = slots(w, &[(1, two()), (2, h())]);
            Ok(vec![
                label("end", fmp_harmonic(&ones(w as i64), &a1, p, 1, true)?, rhs),
                label("start", fmp_harmonic(&ones(w as i64), &a2, p, 1, true)?, rhs),
            ])
        }),
    );

    // nonstar with a leading 2: (2, {1}^(k1-2), 1/2, 2, {1}^(k2-1)), k1 odd >= 3, k2 even
    out.push(
        Builder::closed(
            "mv.lead2",
            1,
            "L*({1}^w; 2,{1}^(k1-2),1/2,2,{1}^(k2-1)) = (2^(w-1)-1)/2^(w-1) {C(w,k1)-1} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |k1, k2| k1 >= 3 && k1 % 2 == 1 && k2 % 2 == 0))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(
                w as usize,
                &[(1, two()), (k1 as usize, h()), (k1 as usize + 1, two())],
            );
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, false)?;
            let rhs = rr(
                &((pow2(w - 1) - rat_int(1)) / pow2(w - 1) * (binc(w, k1) - rat_int(1))
                    * bw(p, w)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // nonstar (2, 1/2, 2, {1}^(m-3)), m odd >= 3
    out.push(
        Builder::closed(
            "mv.212",
            1,
            "L*({1}^m; 2,1/2,2,{1}^(m-3)) = (1-2^(m-1))(m^2-m+2)/2^m B(p-m)/m (mod p), m odd >= 3",
        )
        .guard_text("p > m+1")
        .grid(
            [3i64, 5, 7]
                .into_iter()
                .map(|m| Params::new().with_int("m", m))
                .collect(),
        )
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(|pr, _, p| {
            let m = pr.int("m");
            let args = slots(m as usize, &[(1, two()), (2, h()), (3, two())]);
            let lhs = fmp_harmonic(&ones(m), &args, p, 1, false)?;
            let rhs = rr(
                &((rat_int(1) - pow2(m - 1)) * rat_int(m * m - m + 2) / pow2(m) * bw(p, m)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // star with a trailing 2: ({1}^(k1-1), 2, 1/2, {1}^(k2-2), 2), w odd >= 3, k2 >= 2
    out.push(
        Builder::closed(
            "mv.trail2.star",
            1,
            "L**({1}^w; {1}^(k1-1),2,1/2,{1}^(k2-2),2) = (1-2^(w-1))/2^(w-1) {1+(-1)^(k1-1) C(w,k1)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |k1, k2| (k1 + k2) % 2 == 1 && k2 >= 2))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(
                w as usize,
                &[(k1 as usize, two()), (k1 as usize + 1, h()), (w as usize, two())],
            );
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, true)?;
            let s = if (k1 - 1) % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &((rat_int(1) - pow2(w - 1)) / pow2(w - 1)
                    * (rat_int(1) + rat_int(s) * binc(w, k1))
                    * bw(p, w)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // nonstar mirrored: ({1}^(k1-1), 1/2, 2, {1}^(k2-2), 1/2), k1 even, k2 odd >= 3
    out.push(
        Builder::closed(
            "mv.trailhalf",
            1,
            "L*({1}^w; {1}^(k1-1),1/2,2,{1}^(k2-2),1/2) = (1-2^(w-1))/2^w {C(w,k1)-1} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |k1, k2| k1 % 2 == 0 && k2 >= 3 && k2 % 2 == 1))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(
                w as usize,
                &[(k1 as usize, h()), (k1 as usize + 1, two()), (w as usize, h())],
            );
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, false)?;
            let rhs = rr(
                &((rat_int(1) - pow2(w - 1)) / pow2(w) * (binc(w, k1) - rat_int(1)) * bw(p, w)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // nonstar ({1}^(m-3), 1/2, 2, 1/2), m odd >= 3
    out.push(
        Builder::closed(
            "mv.h2h",
            1,
            "L*({1}^m; {1}^(m-3),1/2,2,1/2) = (2^(m-1)-1)(m^2-m+2)/2^(m+1) B(p-m)/m (mod p), m odd >= 3",
        )
        .guard_text("p > m+1")
        .grid(
            [3i64, 5, 7]
                .into_iter()
                .map(|m| Params::new().with_int("m", m))
                .collect(),
        )
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(|pr, _, p| {
            let m = pr.int("m");
            let mu = m as usize;
            let args = slots(mu, &[(mu - 2, h()), (mu - 1, two()), (mu, h())]);
            let lhs = fmp_harmonic(&ones(m), &args, p, 1, false)?;
            let rhs = rr(
                &((pow2(m - 1) - rat_int(1)) * rat_int(m * m - m + 2) / pow2(m + 1) * bw(p, m)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // star with leading 1/2: (1/2, {1}^(k1-2), 2, 1/2, {1}^(k2-1)), w odd >= 3, k1 >= 2
    out.push(
        Builder::closed(
            "mv.leadhalf.star",
            1,
            "L**({1}^w; 1/2,{1}^(k1-2),2,1/2,{1}^(k2-1)) = (2^(w-1)-1)/2^w {1+(-1)^k1 C(w,k1)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(7, |k1, k2| (k1 + k2) % 2 == 1 && k1 >= 2))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let args = slots(
                w as usize,
                &[(1, h()), (k1 as usize, two()), (k1 as usize + 1, h())],
            );
            let lhs = fmp_harmonic(&ones(w), &args, p, 1, true)?;
            let s = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &((pow2(w - 1) - rat_int(1)) / pow2(w)
                    * (rat_int(1) + rat_int(s) * binc(w, k1))
                    * bw(p, w)),
                p,
                1,
            )?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // single-slot families at position 2 / mirrored, m odd >= 3
    out.push(
        Builder::closed(
            "mv.single",
            1,
            "L*({1}^m;1,2,{1}^(m-2)) = -2 L*({1}^m;{1}^(m-2),1/2,1) and the star mirror = (2^(m-1)-1)(m-1)/2^(m-1) B(p-m)/m (mod p)",
        )
        .guard_text("p > m+1")
        .grid(
            [3i64, 5, 7]
                .into_iter()
                .map(|m| Params::new().with_int("m", m))
                .collect(),
        )
        .guard(|pr| (pr.int("m") + 1) as u64)
        .eval(|pr, _, p| {
            let m = pr.int("m");
            let mu = m as usize;
            let rhs = rr(
                &((pow2(m - 1) - rat_int(1)) * rat_int(m - 1) / pow2(m - 1) * bw(p, m)),
                p,
                1,
            )?;
            let v1 = fmp_harmonic(&ones(m), &slots(mu, &[(2, two())]), p, 1, false)?;
            let v2 = fmp_harmonic(&ones(m), &slots(mu, &[(mu - 1, h())]), p, 1, false)?;
            let v3 = fmp_harmonic(&ones(m), &slots(mu, &[(mu - 1, two())]), p, 1, true)?;
            let v4 = fmp_harmonic(&ones(m), &slots(mu, &[(2, h())]), p, 1, true)?;
            Ok(vec![
                label("nonstar", v1, rhs),
                label("nonstar.mirror.x2", v2.mul_u64(2), -rhs),
                label("star", v3, rhs),
                label("star.mirror.x2", v4.mul_u64(2), -rhs),
            ])
        }),
    );

    // hook-index carriers, k1 even, k2+k3 odd:
    // index ({1}^(k1+k2-1), 2, {1}^(k3-1)) with the 1/2,2 block after k1
    out.push(
        Builder::closed(
            "mv.hook.left",
            1,
            "hook-index value: both flavors equal 1/2 {(-1)^k3 C(w,k3) - (1-2^(w-1))/2^(w-1) C(w,k1)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(triple_grid(|k1, k2, k3| k1 % 2 == 0 && (k2 + k3) % 2 == 1))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let mut parts = vec![1u32; (k1 + k2 - 1) as usize];
            parts.push(2);
            parts.extend(vec![1u32; (k3 - 1) as usize]);
            let idx = Index::new(parts);
            let depth = idx.depth();
            let s3 = if k3 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &((rat_int(s3) * binc(w, k3)
                    - (rat_int(1) - pow2(w - 1)) / pow2(w - 1) * binc(w, k1))
                    / rat_int(2)
                    * bw(p, w)),
                p,
                1,
            )?;
            let a_non = slots(depth, &[(k1 as usize, h()), (k1 as usize + 1, two())]);
            let a_star = slots(depth, &[(k1 as usize, two()), (k1 as usize + 1, h())]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a_non, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &a_star, p, 1, true)?, rhs),
            ])
        }),
    );

    // mirrored hook, k1+k2 odd, k3 even: index ({1}^(k1-1), 2, {1}^(k2+k3-1))
    out.push(
        Builder::closed(
            "mv.hook.right",
            1,
            "mirrored hook-index value: both flavors equal -1/2 {(-1)^k1 C(w,k1) - (1-2^(w-1))/2^(w-1) C(w,k3)} B(p-w)/w (mod p)",
        )
        .guard_text("p > w+1")
        .grid(triple_grid(|k1, k2, k3| (k1 + k2) % 2 == 1 && k3 % 2 == 0))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let mut parts = vec![1u32; (k1 - 1) as usize];
            parts.push(2);
            parts.extend(vec![1u32; (k2 + k3 - 1) as usize]);
            let idx = Index::new(parts);
            let depth = idx.depth();
            let s1 = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs = -rr(
                &((rat_int(s1) * binc(w, k1)
                    - (rat_int(1) - pow2(w - 1)) / pow2(w - 1) * binc(w, k3))
                    / rat_int(2)
                    * bw(p, w)),
                p,
                1,
            )?;
            let pos = (k1 + k2) as usize;
            let a_non = slots(depth, &[(pos - 1, h()), (pos, two())]);
            let a_star = slots(depth, &[(pos - 1, two()), (pos, h())]);
            Ok(vec![
                label("nonstar", fmp_harmonic(&idx, &a_non, p, 1, false)?, rhs),
                label("star", fmp_harmonic(&idx, &a_star, p, 1, true)?, rhs),
            ])
        }),
    );

    // double insertion blocks, k1 even, k2 odd > 1, k3 even
    out.push(
        Builder::closed(
            "mv.double",
            1,
            "{1}^w with two 1/2,2 (resp. 2,1/2) blocks = (1-2^(w-1))/2^w {C(w,k1)-C(w,k3)} B(p-w)/w, star flavor with swapped binomials (mod p)",
        )
        .guard_text("p > w+1")
        .grid(triple_grid(|k1, k2, k3| {
            k1 % 2 == 0 && k2 % 2 == 1 && k2 > 1 && k3 % 2 == 0
        }))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let base = (rat_int(1) - pow2(w - 1)) / pow2(w) * bw(p, w);
            let rhs_non = rr(&(base.clone() * (binc(w, k1) - binc(w, k3))), p, 1)?;
            let rhs_star = rr(&(base * (binc(w, k3) - binc(w, k1))), p, 1)?;
            let a_non = slots(
                w as usize,
                &[
                    (k1 as usize, h()),
                    (k1 as usize + 1, two()),
                    ((k1 + k2) as usize, h()),
                    ((k1 + k2) as usize + 1, two()),
                ],
            );
            let a_star = slots(
                w as usize,
                &[
                    (k1 as usize, two()),
                    (k1 as usize + 1, h()),
                    ((k1 + k2) as usize, two()),
                    ((k1 + k2) as usize + 1, h()),
                ],
            );
            Ok(vec![
                label("nonstar", fmp_harmonic(&ones(w), &a_non, p, 1, false)?, rhs_non),
                label("star", fmp_harmonic(&ones(w), &a_star, p, 1, true)?, rhs_star),
            ])
        }),
    );

    // separated insertion with a 1 gap, k1 and k2 even, depth w+1
    out.push(
        Builder::closed(
            "mv.gap",
            1,
            "L*({1}^(w+1); {1}^(k1-1),1/2,1,2,{1}^(k2-1)) = (1-2^w)/2^(w+1) {C(w+1,k1)-C(w+1,k2)} B(p-w-1)/(w+1), star mirrored (mod p)",
        )
        .guard_text("p > w+2")
        .grid(pair_grid(6, |k1, k2| k1 % 2 == 0 && k2 % 2 == 0))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 2) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let depth = (w + 1) as usize;
            let base = (rat_int(1) - pow2(w)) / pow2(w + 1) * bb(p as i64 - w - 1)
                / rat_int(w + 1);
            let rhs_non = rr(&(base.clone() * (binc(w + 1, k1) - binc(w + 1, k2))), p, 1)?;
            let rhs_star = rr(&(base * (binc(w + 1, k2) - binc(w + 1, k1))), p, 1)?;
            let a_non = slots(
                depth,
                &[(k1 as usize, h()), (k1 as usize + 2, two())],
            );
            let a_star = slots(
                depth,
                &[(k1 as usize, two()), (k1 as usize + 2, h())],
            );
            Ok(vec![
                label(
                    "nonstar",
                    fmp_harmonic(&ones(w + 1), &a_non, p, 1, false)?,
                    rhs_non,
                ),
                label(
                    "star",
                    fmp_harmonic(&ones(w + 1), &a_star, p, 1, true)?,
                    rhs_star,
                ),
            ])
        }),
    );

    // weight-3 wrap-ups: (1,2)/(2,1) at (2,1/2) and (1/2,2); (2,1,1/2) on {1}^3
    out.push(
        Builder::closed(
            "mv.w3",
            1,
            "(1,2)/(2,1) at (2,1/2) and (1/2,2), and {1}^3 at (2,1,1/2): q^3 - 7/8 B(p-3) family (mod p)",
        )
        .guard_text("p > 3")
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(|_, _, p| {
            let i12 = Index::new(vec![1, 2]);
            let i21 = Index::new(vec![2, 1]);
            let i111 = Index::repeat(1, 3);
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c78 = rr(&rat(7, 8), p, 1)?;
            let va = q.pow(3) - c78 * b;
            let vb = -(c78 * b);
            let zero = ResidueValue::zero(p, 1);
            let a2h = [two(), h()];
            let ah2 = [h(), two()];
            let mut checks = Vec::new();
            for star in [false, true] {
                let s = if star { ".star" } else { "" };
                checks.push(label(
                    &format!("12@2h{s}"),
                    fmp_harmonic(&i12, &a2h, p, 1, star)?,
                    va,
                ));
                checks.push(label(
                    &format!("21@2h{s}"),
                    fmp_harmonic(&i21, &a2h, p, 1, star)?,
                    -va,
                ));
                checks.push(label(
                    &format!("12@h2{s}"),
                    fmp_harmonic(&i12, &ah2, p, 1, star)?,
                    vb,
                ));
                checks.push(label(
                    &format!("21@h2{s}"),
                    fmp_harmonic(&i21, &ah2, p, 1, star)?,
                    -vb,
                ));
                checks.push(label(
                    &format!("ones3@21h{s}"),
                    fmp_harmonic(&i111, &[two(), rat_int(1), h()], p, 1, star)?,
                    zero,
                ));
            }
            // remark value: {1}^3 at (1,2,1) and (1,1/2,1)
            let v121 = fmp_harmonic(&i111, &[rat_int(1), two(), rat_int(1)], p, 1, false)?;
            let vhalf = fmp_harmonic(&i111, &[rat_int(1), h(), rat_int(1)], p, 1, false)?;
            let half_b = rr(&rat(1, 2), p, 1)? * b;
            checks.push(label("ones3@121", v121, half_b));
            checks.push(label("ones3@1h1.x2", vhalf.mul_u64(2), -half_b));
            Ok(checks)
        }),
    );

    // exponent-2 block values, k1 and k2 even, depth w-1 = k1+k2
    out.push(
        Builder::closed(
            "mva2.block",
            2,
            "L*({1}^(w-1); {1}^(k1-1),1/2,2,{1}^(k2-1)) = -1/2 {1+(2^(w-1)-1)/2^(w-1) C(w,k2)} B(p-w)/w p; star variant with C(w,k1) and opposite sign (mod p^2), w = k1+k2+1",
        )
        .guard_text("p > w+1")
        .grid(pair_grid(6, |k1, k2| k1 % 2 == 0 && k2 % 2 == 0))
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 2) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2 + 1;
            let depth = (w - 1) as usize;
            let tail_rat = bw(p, w) * pint(p);
            let coef = |kc: i64| {
                (rat_int(1) + (pow2(w - 1) - rat_int(1)) / pow2(w - 1) * binc(w, kc))
                    / rat_int(2)
            };
            let rhs_non = rr(&(-coef(k2) * tail_rat.clone()), p, 2)?;
            let rhs_star = rr(&(coef(k1) * tail_rat), p, 2)?;
            let a_non = slots(depth, &[(k1 as usize, h()), (k1 as usize + 1, two())]);
            let a_star = slots(depth, &[(k1 as usize, two()), (k1 as usize + 1, h())]);
            Ok(vec![
                label(
                    "nonstar",
                    fmp_harmonic(&ones(w - 1), &a_non, p, 2, false)?,
                    rhs_non,
                ),
                label(
                    "star",
                    fmp_harmonic(&ones(w - 1), &a_star, p, 2, true)?,
                    rhs_star,
                ),
            ])
        }),
    );

    // exponent-2 weight-2 values
    out.push(
        Builder::closed(
            "mva2.ones2",
            2,
            "{1}^2 at (2,1/2) and (1/2,2) mod p^2 through q and B(p-3)",
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
            let v_non_2h = -two_q2 + (q.pow(3) - c(7, 8)? * b) * pr2;
            let v_star_2h = -two_q2 + (q.pow(3) - c(5, 24)? * b) * pr2;
            let v_non_h2 = c(5, 24)? * b * pr2;
            let v_star_h2 = c(7, 8)? * b * pr2;
            let a2h = [two(), h()];
            let ah2 = [h(), two()];
            Ok(vec![
                label("2h", fmp_harmonic(&idx, &a2h, p, 2, false)?, v_non_2h),
                label("2h.star", fmp_harmonic(&idx, &a2h, p, 2, true)?, v_star_2h),
                label("h2", fmp_harmonic(&idx, &ah2, p, 2, false)?, v_non_h2),
                label("h2.star", fmp_harmonic(&idx, &ah2, p, 2, true)?, v_star_h2),
            ])
        }),
    );

    out
}

fn pair_grid(max_w: i64, cond: impl Fn(i64, i64) -> bool) -> Vec<Params> {
    let mut g = Vec::new();
    for k1 in 1..=max_w - 1 {
        for k2 in 1..=max_w - k1 {
            if cond(k1, k2) {
                g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
            }
        }
    }
    g
}

fn triple_grid(cond: impl Fn(i64, i64, i64) -> bool) -> Vec<Params> {
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
