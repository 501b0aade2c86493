//! The composed-denominator polylogarithm: its argument-reversal symmetry,
//! the surjection decomposition with its explicit depth-2/3 expansions, and
//! the closed special values at low weight.

use super::*;
use crate::eval::{fast_nested_eval, fmp_harmonic, oy_decompose, oy_li, End};
use crate::modular::reduce_rational;

fn oy_grid(parts_list: &[Vec<u32>]) -> Vec<Params> {
    parts_list
        .iter()
        .map(|parts| Params::new().with_index("kk", Index::new(parts.clone())))
        .collect()
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // li(r) = (-1)^wt r^dep li(1/r)
    out.push(
        Builder::functional(
            "oy.reversal",
            1,
            "li(kk; r) = (-1)^wt r^dep li(kk; 1/r) (mod p)",
        )
        .guard_text("all primes (unit r)")
        .cap(101)
        .grid(oy_grid(&[
            vec![1],
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![1, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
        ]))
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let r = &args[0];
            let lhs = oy_li(k, r, p, 1)?;
            let rinv = r.clone().recip();
            let inner = oy_li(k, &rinv, p, 1)?;
            let rfac = reduce_rational(r, p, 1)?.pow(k.depth() as u64);
            let rhs = if k.weight() % 2 == 0 {
                rfac * inner
            } else {
                -(rfac * inner)
            };
            Ok(one_pair(lhs, rhs))
        }),
    );

    // the surjection decomposition equals the direct sum
    out.push(
        Builder::functional(
            "oy.decomposition",
            1,
            "li(kk; t) = sum_i t^((i-1)p) sum over class-i surjections of grouped head sums (mod p)",
        )
        .guard_text("all primes (unit t)")
        .cap(101)
        .grid(oy_grid(&[
            vec![1],
            vec![3],
            vec![1, 1],
            vec![2, 1],
            vec![1, 2],
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![1, 2, 1],
        ]))
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let t = &args[0];
            Ok(one_pair(oy_li(k, t, p, 1)?, oy_decompose(k, t, p, 1)?))
        }),
    );

    // explicit depth-2 expansion
    out.push(
        Builder::functional(
            "oy.depth2",
            1,
            "li(k1,k2; t) = L(k2,k1; t) + t^p Ltail(k1,k2; t) (mod p)",
        )
        .guard_text("all primes (unit t)")
        .cap(101)
        .grid({
            let mut g = Vec::new();
            for k1 in 1..=3i64 {
                for k2 in 1..=3i64 {
                    g.push(Params::new().with_int("k1", k1).with_int("k2", k2));
                }
            }
            g
        })
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let (k1, k2) = (pr.int("k1") as u32, pr.int("k2") as u32);
            let t = &args[0];
            let lhs = oy_li(&Index::new(vec![k1, k2]), t, p, 1)?;
            let tp = reduce_rational(t, p, 1)?.pow(p);
            let head = fast_nested_eval(&Index::new(vec![k2, k1]), t, p, 1, false, End::Head)?;
            let tail = fast_nested_eval(&Index::new(vec![k1, k2]), t, p, 1, false, End::Tail)?;
            Ok(one_pair(lhs, head + tp * tail))
        }),
    );

    // explicit depth-3 expansion (eight terms)
    out.push(
        Builder::functional(
            "oy.depth3",
            1,
            "li(k1,k2,k3; t) expanded into the eight grouped head/tail sums (mod p)",
        )
        .guard_text("all primes (unit t)")
        .cap(101)
        .grid({
            let mut g = Vec::new();
            for (k1, k2, k3) in [(1i64, 1, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2), (2, 1, 2)] {
                g.push(
                    Params::new()
                        .with_int("k1", k1)
                        .with_int("k2", k2)
                        .with_int("k3", k3),
                );
            }
            g
        })
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let (k1, k2, k3) = (
                pr.int("k1") as u32,
                pr.int("k2") as u32,
                pr.int("k3") as u32,
            );
            let t = &args[0];
            let lhs = oy_li(&Index::new(vec![k1, k2, k3]), t, p, 1)?;
            let tp = reduce_rational(t, p, 1)?.pow(p);
            let head = |a: u32, b: u32, c: u32| {
                fast_nested_eval(&Index::new(vec![a, b, c]), t, p, 1, false, End::Head)
            };
            let tail = |a: u32, b: u32, c: u32| {
                fast_nested_eval(&Index::new(vec![a, b, c]), t, p, 1, false, End::Tail)
            };
            let mid = |a: u32, b: u32, c: u32| {
                fmp_harmonic(
                    &Index::new(vec![a, b, c]),
                    &[rat_int(1), t.clone(), rat_int(1)],
                    p,
                    1,
                    false,
                )
            };
            let head2 = |a: u32, b: u32| {
                fast_nested_eval(&Index::new(vec![a, b]), t, p, 1, false, End::Head)
            };
            let tail2 = |a: u32, b: u32| {
                fast_nested_eval(&Index::new(vec![a, b]), t, p, 1, false, End::Tail)
            };
            let rhs = head(k3, k2, k1)?
                + tp * head(k3, k1, k2)?
                + tp * tail(k2, k1, k3)?
                + tp * mid(k2, k3, k1)?
                + tp * mid(k1, k3, k2)?
                + tp * head2(k1 + k3, k2)?
                + tp * tail2(k2, k1 + k3)?
                + tp * tp * tail(k1, k2, k3)?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // li(kk; 1) = 0
    out.push(
        Builder::closed("oy.at-one", 1, "li(kk; 1) = 0 (mod p)")
            .guard_text("p > wt+1")
            .cap(101)
            .grid(oy_grid(&[
                vec![1],
                vec![1, 1],
                vec![2, 1],
                vec![2, 2],
                vec![1, 1, 1],
                vec![1, 2, 1],
                vec![3, 1, 1],
            ]))
            .guard(|pr| (pr.index("kk").weight() + 1) as u64)
            .eval(|pr, _, p| {
                let k = pr.index("kk");
                let lhs = oy_li(k, &rat_int(1), p, 1)?;
                Ok(one_pair(lhs, ResidueValue::zero(p, 1)))
            }),
    );

    // weight-2/3 special values through q and B(p-3)
    out.push(
        Builder::closed(
            "oy.low-weight",
            1,
            "li values at -1, 2, 1/2 for {1}^2, (1,2), (2,1), {1}^3 through q and B(p-3) (mod p)",
        )
        .guard_text("p > 3")
        .cap(101)
        .grid(vec![Params::new()])
        .guard(|_| 3)
        .eval(|_, _, p| {
            let q = q2(p, 1)?;
            let b = rr(&bb(p as i64 - 3), p, 1)?;
            let c = |num: i64, den: i64| rr(&rat(num, den), p, 1);
            let i11 = Index::new(vec![1, 1]);
            let i12 = Index::new(vec![1, 2]);
            let i21 = Index::new(vec![2, 1]);
            let i111 = Index::new(vec![1, 1, 1]);
            let neg1 = rat_int(-1);
            let two = rat_int(2);
            let half = rat(1, 2);
            let zero = ResidueValue::zero(p, 1);
            let two_q2 = q * q + q * q;
            let v3 = -(c(4, 3)? * q.pow(3)) - c(2, 3)? * b;
            Ok(vec![
                label("11@-1", oy_li(&i11, &neg1, p, 1)?, two_q2),
                label("11@2", oy_li(&i11, &two, p, 1)?, two_q2),
                label("11@1/2", oy_li(&i11, &half, p, 1)?, c(1, 2)? * q * q),
                label("12@-1", oy_li(&i12, &neg1, p, 1)?, zero),
                label("21@-1", oy_li(&i21, &neg1, p, 1)?, zero),
                label(
                    "12@2",
                    oy_li(&i12, &two, p, 1)?,
                    c(2, 3)? * q.pow(3) - c(2, 3)? * b,
                ),
                label(
                    "21@2",
                    oy_li(&i21, &two, p, 1)?,
                    c(2, 3)? * q.pow(3) + c(4, 3)? * b,
                ),
                label(
                    "12@1/2",
                    oy_li(&i12, &half, p, 1)?,
                    -(c(1, 6)? * q.pow(3)) + c(1, 6)? * b,
                ),
                label(
                    "21@1/2",
                    oy_li(&i21, &half, p, 1)?,
                    -(c(1, 6)? * q.pow(3)) - c(1, 3)? * b,
                ),
                label("111@-1", oy_li(&i111, &neg1, p, 1)?, v3),
                label("111@2", oy_li(&i111, &two, p, 1)?, v3),
                label(
                    "111@1/2",
                    oy_li(&i111, &half, p, 1)?,
                    c(1, 6)? * q.pow(3) + c(1, 12)? * b,
                ),
            ])
        }),
    );

    out
}
