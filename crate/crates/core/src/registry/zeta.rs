//! Closed forms for multiple zeta values mod p^n: repeated indices, low
//! depth at higher exponents, symmetric sums, reversal, duality, and the
//! one-2-among-1s family.

use super::*;
use crate::eval::mhs;
use crate::index::indices_of_weight;

fn repeat_grid() -> Vec<Params> {
    let mut out = Vec::new();
    for k in 1..=6i64 {
        for m in 1..=6i64 {
            if k * m <= 6 {
                out.push(Params::new().with_int("k", k).with_int("m", m));
            }
        }
    }
    out
}

fn depth2_pairs(max_w: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for k1 in 1..=max_w - 1 {
        for k2 in 1..=max_w - k1 {
            out.push((k1, k2));
        }
    }
    out
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // zeta_star({k}^m) = k B_{p-mk-1}/(mk+1) p  (mod p^2)
    out.push(
        Builder::closed(
            "fmzv.repeat.star",
            2,
            "zeta*({k}^m) = k B(p-mk-1)/(mk+1) p (mod p^2)",
        )
        .guard_text("p > mk+2")
        .grid(repeat_grid())
        .guard(|pr| (pr.int("m") * pr.int("k") + 2) as u64)
        .eval(|pr, _, p| {
            let (k, m) = (pr.int("k"), pr.int("m"));
            let lhs = mhs(&Index::repeat(k as u32, m as usize), p, 2, true);
            let rhs_rat = rat_int(k) * bb(p as i64 - m * k - 1) / rat_int(m * k + 1) * pint(p);
            Ok(one_pair(lhs, rr(&rhs_rat, p, 2)?))
        }),
    );

    // zeta({k}^m) = (-1)^{m-1} zeta*({k}^m)  (mod p^2)
    out.push(
        Builder::closed(
            "fmzv.repeat.nonstar",
            2,
            "zeta({k}^m) = (-1)^(m-1) k B(p-mk-1)/(mk+1) p (mod p^2)",
        )
        .guard_text("p > mk+2")
        .grid(repeat_grid())
        .guard(|pr| (pr.int("m") * pr.int("k") + 2) as u64)
        .eval(|pr, _, p| {
            let (k, m) = (pr.int("k"), pr.int("m"));
            let lhs = mhs(&Index::repeat(k as u32, m as usize), p, 2, false);
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let rhs_rat =
                rat_int(sign * k) * bb(p as i64 - m * k - 1) / rat_int(m * k + 1) * pint(p);
            Ok(one_pair(lhs, rr(&rhs_rat, p, 2)?))
        }),
    );

    // depth-1 value mod p^3
    out.push(
        Builder::closed(
            "fmzv.depth1.mod3",
            3,
            "zeta(k) mod p^3: C(k+1,2) Bh(p-k-2) p^2 for odd k; k(Bh(2p-k-2) - 2 Bh(p-k-1)) p for even k",
        )
        .guard_text("p > k+3")
        .grid((1..=6).map(|k| Params::new().with_int("k", k)).collect())
        .guard(|pr| (pr.int("k") + 3) as u64)
        .eval(|pr, _, p| {
            let k = pr.int("k");
            let lhs = mhs(&Index::single(k as u32), p, 3, false);
            let rhs_rat = if k % 2 == 1 {
                binc(k + 1, 2) * bh(p as i64 - k - 2) * pint(p) * pint(p)
            } else {
                rat_int(k)
                    * (bh(2 * p as i64 - k - 2) - rat_int(2) * bh(p as i64 - k - 1))
                    * pint(p)
            };
            Ok(one_pair(lhs, rr(&rhs_rat, p, 3)?))
        }),
    );

    // depth-1 value mod p^4
    out.push(
        Builder::closed(
            "fmzv.depth1.mod4",
            4,
            "zeta(k) mod p^4 in terms of Bh at p-k-3 .. 3p-k-3",
        )
        .guard_text("p > k+4")
        .cap(61)
        .grid((1..=6).map(|k| Params::new().with_int("k", k)).collect())
        .guard(|pr| (pr.int("k") + 4) as u64)
        .eval(|pr, _, p| {
            let k = pr.int("k");
            let pl = p as i64;
            let lhs = mhs(&Index::single(k as u32), p, 4, false);
            let rhs_rat = if k % 2 == 1 {
                -binc(k + 1, 2)
                    * (bh(2 * pl - k - 3) - rat_int(2) * bh(pl - k - 2))
                    * pint(p)
                    * pint(p)
            } else {
                -rat_int(k)
                    * (bh(3 * pl - k - 3) - rat_int(3) * bh(2 * pl - k - 2)
                        + rat_int(3) * bh(pl - k - 1))
                    * pint(p)
                    - binc(k + 2, 3) * bh(pl - k - 3) * pint(p) * pint(p) * pint(p)
            };
            Ok(one_pair(lhs, rr(&rhs_rat, p, 4)?))
        }),
    );

    // depth-2 value mod p, both flavors
    // NOTE: the tabulated sufficient condition p > k1+k2-1 admits p = w+1,
    // where the value lands on the index-1 Bernoulli number and the printed
    // form fails under the plus convention (and the star flavor under either
    // convention); the guard here starts above that edge.
    out.push(
        Builder::closed(
            "fmzv.depth2.mod1",
            1,
            "zeta^•(k1,k2) = (-1)^k1 C(k1+k2,k1) B(p-k1-k2)/(k1+k2) (mod p), both flavors",
        )
        .guard_text("p > k1+k2+1")
        .grid(
            depth2_pairs(7)
                .into_iter()
                .map(|(k1, k2)| Params::new().with_int("k1", k1).with_int("k2", k2))
                .collect(),
        )
        .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let w = k1 + k2;
            let idx = Index::new(vec![k1 as u32, k2 as u32]);
            let sign = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs = rr(
                &(rat_int(sign) * binc(w, k1) * bb(p as i64 - w) / rat_int(w)),
                p,
                1,
            )?;
            Ok(vec![
                label("nonstar", mhs(&idx, p, 1, false), rhs),
                label("star", mhs(&idx, p, 1, true), rhs),
            ])
        }),
    );

    // depth-2, w even, mod p^2 (non-star and star differ by the w term)
    for (id, star, diag_sign) in [
        ("fmzv.depth2.mod2.nonstar", false, -1i64),
        ("fmzv.depth2.mod2.star", true, 1i64),
    ] {
        out.push(
            Builder::closed(
                id,
                2,
                format!(
                    "zeta{}(k1,k2), k1+k2 even = 1/2 {{(-1)^k2 k1 C(w+1,k2) - (-1)^k1 k2 C(w+1,k1) {} w}} B(p-w-1)/(w+1) p (mod p^2)",
                    if star { "*" } else { "" },
                    if diag_sign > 0 { "+" } else { "-" }
                ),
            )
            .guard_text("p > w+1")
            .grid(
                depth2_pairs(6)
                    .into_iter()
                    .filter(|(a, b)| (a + b) % 2 == 0)
                    .map(|(k1, k2)| Params::new().with_int("k1", k1).with_int("k2", k2))
                    .collect(),
            )
            .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
            .eval(move |pr, _, p| {
                let (k1, k2) = (pr.int("k1"), pr.int("k2"));
                let w = k1 + k2;
                let idx = Index::new(vec![k1 as u32, k2 as u32]);
                let lhs = mhs(&idx, p, 2, star);
                let s1 = if k2 % 2 == 0 { 1 } else { -1 };
                let s2 = if k1 % 2 == 0 { 1 } else { -1 };
                let braced = rat_int(s1 * k1) * binc(w + 1, k2)
                    - rat_int(s2 * k2) * binc(w + 1, k1)
                    + rat_int(diag_sign * w);
                let rhs_rat =
                    braced / rat_int(2) * bb(p as i64 - w - 1) / rat_int(w + 1) * pint(p);
                Ok(one_pair(lhs, rr(&rhs_rat, p, 2)?))
            }),
        );
    }

    // depth-3, w' odd, mod p
    out.push(
        Builder::closed(
            "fmzv.depth3.mod1",
            1,
            "zeta(k1,k2,k3) = -zeta*(k1,k2,k3) = 1/2 {(-1)^k3 C(w,k3) - (-1)^k1 C(w,k1)} B(p-w)/w (mod p), w odd",
        )
        .guard_text("p > w")
        .grid({
            let mut g = Vec::new();
            for k1 in 1..=3i64 {
                for k2 in 1..=3i64 {
                    for k3 in 1..=3i64 {
                        if (k1 + k2 + k3) % 2 == 1 && k1 + k2 + k3 <= 7 {
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
        })
        .guard(|pr| (pr.int("k1") + pr.int("k2") + pr.int("k3")) as u64)
        .eval(|pr, _, p| {
            let (k1, k2, k3) = (pr.int("k1"), pr.int("k2"), pr.int("k3"));
            let w = k1 + k2 + k3;
            let idx = Index::new(vec![k1 as u32, k2 as u32, k3 as u32]);
            let s3 = if k3 % 2 == 0 { 1 } else { -1 };
            let s1 = if k1 % 2 == 0 { 1 } else { -1 };
            let rhs_rat = (rat_int(s3) * binc(w, k3) - rat_int(s1) * binc(w, k1))
                / rat_int(2)
                * bb(p as i64 - w)
                / rat_int(w);
            let rhs = rr(&rhs_rat, p, 1)?;
            Ok(vec![
                label("nonstar", mhs(&idx, p, 1, false), rhs),
                label("star", mhs(&idx, p, 1, true), -rhs),
            ])
        }),
    );

    // symmetric-sum vanishing, both flavors
    out.push(
        Builder::closed(
            "fmzv.symsum",
            1,
            "sum over permutations of zeta^•(sigma(kk)) = 0 (mod p)",
        )
        .guard_text("p > wt+1")
        .grid(
            [
                vec![1u32, 2],
                vec![1, 4],
                vec![2, 3],
                vec![1, 1, 2],
                vec![1, 2, 3],
                vec![2, 2, 3],
            ]
            .into_iter()
            .map(|ks| Params::new().with_index("kk", Index::new(ks)))
            .collect(),
        )
        .guard(|pr| (pr.index("kk").weight() + 1) as u64)
        .eval(|pr, _, p| {
            let k = pr.index("kk");
            let parts = k.parts();
            let m = parts.len();
            // all m! position permutations, repeats included
            let mut order: Vec<usize> = (0..m).collect();
            let mut perms = Vec::new();
            loop {
                perms.push(order.clone());
                if !next_permutation(&mut order) {
                    break;
                }
            }
            let mut checks = Vec::new();
            for star in [false, true] {
                let mut acc = ResidueValue::zero(p, 1);
                for perm in &perms {
                    let arranged: Vec<u32> = perm.iter().map(|&i| parts[i]).collect();
                    acc = acc + mhs(&Index::new(arranged), p, 1, star);
                }
                checks.push(label(
                    if star { "star" } else { "nonstar" },
                    acc,
                    ResidueValue::zero(p, 1),
                ));
            }
            Ok(checks)
        }),
    );

    // reversal sign, both flavors, all primes
    out.push(
        Builder::closed(
            "fmzv.reversal",
            1,
            "zeta^•(kk) = (-1)^wt zeta^•(reverse kk) (mod p)",
        )
        .guard_text("all primes")
        .grid(
            (1..=6u32)
                .flat_map(indices_of_weight)
                .filter(|k| k.depth() <= 4)
                .step_by(3)
                .map(|k| Params::new().with_index("kk", k))
                .collect(),
        )
        .guard(|_| 1)
        .eval(|pr, _, p| {
            let k = pr.index("kk");
            let sign = k.weight() % 2 == 0;
            let mut checks = Vec::new();
            for star in [false, true] {
                let lhs = mhs(k, p, 1, star);
                let r = mhs(&k.reverse(), p, 1, star);
                let rhs = if sign { r } else { -r };
                checks.push(label(if star { "star" } else { "nonstar" }, lhs, rhs));
            }
            Ok(checks)
        }),
    );

    // duality: zeta*(kk) = -zeta*(dual kk), all primes
    out.push(
        Builder::closed("fmzv.duality", 1, "zeta*(kk) = -zeta*(dual kk) (mod p)")
            .guard_text("all primes")
            .grid(
                (1..=7u32)
                    .flat_map(indices_of_weight)
                    .filter(|k| k.depth() <= 4)
                    .step_by(5)
                    .map(|k| Params::new().with_index("kk", k))
                    .collect(),
            )
            .guard(|_| 1)
            .eval(|pr, _, p| {
                let k = pr.index("kk");
                let lhs = mhs(k, p, 1, true);
                let rhs = -mhs(&k.hoffman_dual(), p, 1, true);
                Ok(one_pair(lhs, rhs))
            }),
    );

    // zeta*(k1, {1}^{k2-1}) = (-1)^k1 zeta(k1, {1}^{k2-1})
    out.push(
        Builder::closed(
            "fmzv.hook",
            1,
            "zeta*(k1,{1}^(k2-1)) = (-1)^k1 zeta(k1,{1}^(k2-1)) (mod p)",
        )
        .guard_text("p > k2")
        .grid({
            let mut g = Vec::new();
            for k1 in 1..=4i64 {
                for k2 in 1..=4i64 {
                    g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                }
            }
            g
        })
        .guard(|pr| pr.int("k2") as u64)
        .eval(|pr, _, p| {
            let (k1, k2) = (pr.int("k1"), pr.int("k2"));
            let mut parts = vec![k1 as u32];
            parts.extend(vec![1u32; (k2 - 1) as usize]);
            let idx = Index::new(parts);
            let lhs = mhs(&idx, p, 1, true);
            let r = mhs(&idx, p, 1, false);
            let rhs = if k1 % 2 == 0 { r } else { -r };
            Ok(one_pair(lhs, rhs))
        }),
    );

    // the one-2-among-1s depth family mod p^2, both flavors
    let ppt_grid = || {
        let mut g = Vec::new();
        for k1 in 1..=5i64 {
            for k2 in 1..=5i64 {
                if (k1 + k2) % 2 == 0 && k1 + k2 <= 6 {
                    g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                }
            }
        }
        g
    };
    for (id, star) in [("ppt.nonstar", false), ("ppt.star", true)] {
        out.push(
            Builder::closed(
                id,
                2,
                format!(
                    "zeta{}({{1}}^(k1-1),2,{{1}}^(k2-1)) = 1/2 {{1 - (-1)^k2 C(w,{})}} B(p-w)/w p (mod p^2), w = k1+k2+1",
                    if star { "*" } else { "" },
                    if star { "k2+1" } else { "k1+1" }
                ),
            )
            .guard_text("p > k1+k2+1")
            .grid(ppt_grid())
            .guard(|pr| (pr.int("k1") + pr.int("k2") + 1) as u64)
            .eval(move |pr, _, p| {
                let (k1, k2) = (pr.int("k1"), pr.int("k2"));
                let w = k1 + k2 + 1;
                let mut parts = vec![1u32; (k1 - 1) as usize];
                parts.push(2);
                parts.extend(vec![1u32; (k2 - 1) as usize]);
                let idx = Index::new(parts);
                let lhs = mhs(&idx, p, 2, star);
                let s = if k2 % 2 == 0 { 1 } else { -1 };
                let col = if star { k2 + 1 } else { k1 + 1 };
                let rhs_rat = (rat_int(1) - rat_int(s) * binc(w, col)) / rat_int(2)
                    * bb(p as i64 - w)
                    / rat_int(w)
                    * pint(p);
                Ok(one_pair(lhs, rr(&rhs_rat, p, 2)?))
            }),
        );
    }

    out
}

/// In-place next lexicographic permutation; false when exhausted.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
