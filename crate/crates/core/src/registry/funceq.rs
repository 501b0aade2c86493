//! Functional equations: the reversal formulas, the shuffle-star duality
//! equation (with its grouped-substitution corollary), the antipode-style
//! product relations, and their one-variable specializations.

use super::*;
use crate::eval::{fast_nested_eval, fmp_harmonic, fmp_shuffle, mhs, End};
use crate::modular::reduce_rational;

fn small_indices(max_w: u32, max_d: usize) -> Vec<Index> {
    (1..=max_w)
        .flat_map(crate::index::indices_of_weight)
        .filter(|k| k.depth() <= max_d)
        .collect()
}

fn index_grid(ks: &[Vec<u32>]) -> Vec<Params> {
    ks.iter()
        .map(|p| Params::new().with_index("kk", Index::new(p.clone())))
        .collect()
}

/// LHS of the shuffle-star duality equation at exponent 2:
/// Lsh*(kk; t) + (Lsh*((1)++kk; 1,t) - Lsh*(kk+e1; t)) p
fn duality_lhs(k: &Index, args: &[Rational], p: u64) -> ModResult<ResidueValue> {
    let base = fmp_shuffle(k, args, p, 2, true)?;
    let mut ext_args = vec![rat_int(1)];
    ext_args.extend_from_slice(args);
    let ext = fmp_shuffle(&k.prepend(1), &ext_args, p, 2, true)?;
    let bump = fmp_shuffle(&k.bump(1), args, p, 2, true)?;
    let pres = ResidueValue::new(p as i128, p, 2);
    Ok(base + (ext - bump) * pres)
}

/// RHS of the duality equation: the weight-deep shuffle-star sum over
/// {1}^w with 1-t_i inserted after each k_i block, minus the variant whose
/// last argument is 1.
fn duality_rhs(k: &Index, args: &[Rational], p: u64) -> ModResult<ResidueValue> {
    let w = k.weight() as usize;
    let ones_idx = Index::repeat(1, w);
    let mut a1: Vec<Rational> = Vec::with_capacity(w);
    for (i, &ki) in k.parts().iter().enumerate() {
        a1.extend(vec![rat_int(1); (ki - 1) as usize]);
        a1.push(rat_int(1) - args[i].clone());
    }
    let mut a2 = a1.clone();
    a2[w - 1] = rat_int(1);
    // the grouped sums require unit arguments only in ratio slots; shuffle
    // conversion divides consecutive arguments, so 1 - t must stay a unit.
    let first = fmp_shuffle(&ones_idx, &a1, p, 2, true)?;
    let second = fmp_shuffle(&ones_idx, &a2, p, 2, true)?;
    Ok(first - second)
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // ---- reversal formulas ----

    // exponent-2 multi-variable reversal with the index-bump correction row
    out.push(
        Builder::functional(
            "rev.mod2.multi",
            2,
            "L*•(kk; t..) = (-1)^wt (prod t)^p [L*•(rev kk; inv t..) + p sum_i k_i L*•(rev(kk+e_i); inv t..)] (mod p^2)",
        )
        .guard_text("all primes (unit arguments)")
        .grid(index_grid(&[
            vec![1],
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![1, 3],
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
        ]))
        .guard(|_| 2)
        .arguments(|pr, p| sample_tuples(pr.index("kk").depth(), p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let m = k.depth();
            let rev = k.reverse();
            let inv_args: Vec<Rational> =
                args.iter().rev().map(|t| t.clone().recip()).collect();
            let pres = ResidueValue::new(p as i128, p, 2);
            let mut checks = Vec::new();
            for star in [false, true] {
                let lhs = fmp_harmonic(k, args, p, 2, star)?;
                let mut inner = fmp_harmonic(&rev, &inv_args, p, 2, star)?;
                let mut corr = ResidueValue::zero(p, 2);
                for i in 1..=m {
                    let bumped = k.bump(i).reverse();
                    let v = fmp_harmonic(&bumped, &inv_args, p, 2, star)?;
                    corr = corr + v.mul_u64(k.parts()[i - 1] as u64);
                }
                inner = inner + pres * corr;
                let mut prod_p = ResidueValue::one(p, 2);
                for t in args {
                    prod_p = prod_p * reduce_rational(t, p, 2)?.pow(p);
                }
                let rhs = if k.weight() % 2 == 0 {
                    prod_p * inner
                } else {
                    -(prod_p * inner)
                };
                checks.push(label(if star { "star" } else { "nonstar" }, lhs, rhs));
            }
            Ok(checks)
        }),
    );

    // exponent-1 multi-variable reversal
    out.push(
        Builder::functional(
            "rev.mod1.multi",
            1,
            "L*•(kk; t..) = (-1)^wt (prod t)^p L*•(rev kk; inv t..) (mod p)",
        )
        .guard_text("all primes (unit arguments)")
        .grid(index_grid(&[
            vec![1],
            vec![3],
            vec![1, 2],
            vec![2, 2],
            vec![1, 1, 2],
            vec![1, 2, 1],
        ]))
        .guard(|_| 2)
        .arguments(|pr, p| sample_tuples(pr.index("kk").depth(), p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let rev = k.reverse();
            let inv_args: Vec<Rational> = args.iter().rev().map(|t| t.clone().recip()).collect();
            let mut checks = Vec::new();
            for star in [false, true] {
                let lhs = fmp_harmonic(k, args, p, 1, star)?;
                let inner = fmp_harmonic(&rev, &inv_args, p, 1, star)?;
                let mut prod_p = ResidueValue::one(p, 1);
                for t in args {
                    prod_p = prod_p * reduce_rational(t, p, 1)?.pow(p);
                }
                let rhs = if k.weight() % 2 == 0 {
                    prod_p * inner
                } else {
                    -(prod_p * inner)
                };
                checks.push(label(if star { "star" } else { "nonstar" }, lhs, rhs));
            }
            Ok(checks)
        }),
    );

    // one-variable reversal: head <-> tail
    out.push(
        Builder::functional(
            "rev.mod1.onevar",
            1,
            "L•(kk; t) = (-1)^wt t^p Ltail•(rev kk; 1/t) and the mirrored form (mod p)",
        )
        .guard_text("all primes (unit t)")
        .grid(index_grid(&[
            vec![2],
            vec![1, 2],
            vec![2, 1, 1],
            vec![3, 1],
        ]))
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let rev = k.reverse();
            let t = &args[0];
            let tinv = t.clone().recip();
            let tp = reduce_rational(t, p, 1)?.pow(p);
            let negate = k.weight() % 2 == 1;
            let mut checks = Vec::new();
            for star in [false, true] {
                let head = fast_nested_eval(k, t, p, 1, star, End::Head)?;
                let tail_inv = fast_nested_eval(&rev, &tinv, p, 1, star, End::Tail)?;
                let rhs = if negate {
                    -(tp * tail_inv)
                } else {
                    tp * tail_inv
                };
                checks.push(label(if star { "head.star" } else { "head" }, head, rhs));
                let tail = fast_nested_eval(k, t, p, 1, star, End::Tail)?;
                let head_inv = fast_nested_eval(&rev, &tinv, p, 1, star, End::Head)?;
                let rhs2 = if negate {
                    -(tp * head_inv)
                } else {
                    tp * head_inv
                };
                checks.push(label(if star { "tail.star" } else { "tail" }, tail, rhs2));
            }
            Ok(checks)
        }),
    );

    // ---- the shuffle-star duality equation and its corollaries ----

    out.push(
        Builder::functional(
            "fneq.duality.multi",
            2,
            "Lsh*(kk;t..) + (Lsh*((1)++kk;1,t..) - Lsh*(kk+e1;t..)) p = grouped {1}^w sums at 1-t (mod p^2)",
        )
        .guard_text("all primes (unit arguments)")
        .grid(index_grid(&[
            vec![1],
            vec![2],
            vec![3],
            vec![1, 1],
            vec![2, 1],
            vec![1, 2],
            vec![2, 2],
            vec![1, 1, 1],
            vec![1, 2, 1],
        ]))
        .guard(|_| 2)
        .arguments(|pr, p| {
            // 1 - t_i enters ratio slots of the grouped sums, so keep it a unit
            sample_tuples(pr.index("kk").depth(), p)
                .into_iter()
                .filter(|tuple| {
                    tuple
                        .iter()
                        .all(|t| crate::eval::is_p_unit(&(rat_int(1) - t), p))
                })
                .collect()
        })
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            Ok(one_pair(
                duality_lhs(k, args, p)?,
                duality_rhs(k, args, p)?,
            ))
        }),
    );

    // grouped-substitution corollary: substitute 1 over a subset S of the
    // first m-1 slots and regroup through the dual index
    out.push(
        Builder::functional(
            "fneq.duality.grouped",
            2,
            "the duality equation at t_S = 1 equals the regrouped sum over the dual of the S-grouped index (mod p^2)",
        )
        .guard_text("all primes (unit arguments)")
        .grid({
            let mut g = Vec::new();
            for parts in [vec![2u32, 1], vec![1, 2], vec![2, 2], vec![1, 1, 1], vec![1, 2, 1], vec![3, 1]] {
                let k = Index::new(parts);
                let m = k.depth();
                for mask in 0..(1u32 << (m - 1)) {
                    g.push(
                        Params::new()
                            .with_index("kk", k.clone())
                            .with_int("subset", mask as i64),
                    );
                }
            }
            g
        })
        .guard(|_| 2)
        .arguments(|pr, p| {
            let k = pr.index("kk");
            let mask = pr.int("subset") as u32;
            let free = k.depth() - (mask.count_ones() as usize);
            sample_tuples(free, p)
                .into_iter()
                .filter(|tuple| {
                    tuple
                        .iter()
                        .all(|t| crate::eval::is_p_unit(&(rat_int(1) - t), p))
                })
                .collect()
        })
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let m = k.depth();
            let mask = pr.int("subset") as u32;
            let subset: Vec<usize> =
                (1..m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            // reassemble the full argument tuple with 1 at subset slots;
            // `args` carries the free slots (complement in 1..m-1, then m)
            let mut full = Vec::with_capacity(m);
            let mut it = args.iter();
            for i in 1..=m {
                if subset.contains(&i) {
                    full.push(rat_int(1));
                } else {
                    full.push(it.next().expect("arity matches free slots").clone());
                }
            }
            let lhs = duality_lhs(k, &full, p)?;

            // grouped index: sums between consecutive subset positions
            let mut grouped = Vec::new();
            let mut acc = 0u32;
            for (i, &ki) in k.parts().iter().enumerate() {
                acc += ki;
                if subset.contains(&(i + 1)) {
                    grouped.push(acc);
                    acc = 0;
                }
            }
            grouped.push(acc);
            let dual = Index::new(grouped).hoffman_dual();
            let md = dual.depth();
            let ls = k.partial_sums();
            let complement: Vec<usize> = (1..m).filter(|i| !subset.contains(i)).collect();
            // argument layout: slot q_i = l_{j_i} - j_i + i receives 1 - t_{j_i},
            // the last slot receives 1 - t_m
            let mut a1 = vec![rat_int(1); md];
            let mut free_it = args.iter();
            for (i0, &ji) in complement.iter().enumerate() {
                let q = ls[ji - 1] as usize - ji + (i0 + 1);
                a1[q - 1] = rat_int(1) - free_it.next().unwrap().clone();
            }
            let t_m = free_it.next().unwrap().clone();
            a1[md - 1] = rat_int(1) - t_m;
            let mut a2 = a1.clone();
            a2[md - 1] = rat_int(1);
            // the dual of a grouped index of weight w always has weight w,
            // and its sums run over depth equal to that weight
            debug_assert_eq!(dual.weight(), k.weight());
            debug_assert_eq!(md, dual.depth());
            let first = shuffle_star_grouped(&dual, &a1, p)?;
            let second = shuffle_star_grouped(&dual, &a2, p)?;
            Ok(one_pair(lhs, first - second))
        }),
    );

    // the product relation: sum_j (-1)^j L*(head_j) L*star(reversed tail_j) = 0
    out.push(
        Builder::functional(
            "fneq.antipode.multi",
            2,
            "sum_j (-1)^j L*(k1..kj; t1..tj) L**(km..k_{j+1}; tm..t_{j+1}) = 0 (mod p^n)",
        )
        .guard_text("all primes (unit arguments)")
        .grid({
            let mut g = Vec::new();
            for parts in [
                vec![1u32],
                vec![2, 1],
                vec![1, 2],
                vec![2, 2],
                vec![1, 1, 1],
                vec![2, 1, 1],
                vec![1, 2, 3],
            ] {
                for n in [1i64, 2] {
                    g.push(
                        Params::new()
                            .with_index("kk", Index::new(parts.clone()))
                            .with_int("n", n),
                    );
                }
            }
            g
        })
        .guard(|_| 2)
        .arguments(|pr, p| sample_tuples(pr.index("kk").depth(), p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let n = pr.int("n") as u8;
            let m = k.depth();
            let mut acc = ResidueValue::one(p, n); // j = 0 term: 1 * full star
            acc = acc * rev_tail_star(k, args, 0, p, n)?;
            for j in 1..=m {
                let head = fmp_harmonic(&k.prefix(j), &args[..j], p, n, false)?;
                let tail = if j == m {
                    ResidueValue::one(p, n)
                } else {
                    rev_tail_star(k, args, j, p, n)?
                };
                let term = head * tail;
                acc = if j % 2 == 1 { acc - term } else { acc + term };
            }
            Ok(one_pair(acc, ResidueValue::zero(p, n)))
        }),
    );

    // scalar antipode relation on zeta values
    out.push(
        Builder::closed(
            "fneq.antipode.zeta",
            2,
            "sum_j (-1)^j zeta(k1..kj) zeta*(km..k_{j+1}) = 0 (mod p^n)",
        )
        .guard_text("all primes")
        .grid({
            let mut g = Vec::new();
            for parts in [
                vec![2u32, 1],
                vec![1, 2],
                vec![3, 1],
                vec![1, 1, 2],
                vec![2, 1, 2],
                vec![1, 1, 1, 1],
            ] {
                for n in [1i64, 2] {
                    g.push(
                        Params::new()
                            .with_index("kk", Index::new(parts.clone()))
                            .with_int("n", n),
                    );
                }
            }
            g
        })
        .guard(|_| 1)
        .eval(|pr, _, p| {
            let k = pr.index("kk");
            let n = pr.int("n") as u8;
            let m = k.depth();
            let mut acc = mhs(&k.reversed_suffix(0), p, n, true);
            for j in 1..=m {
                let head = mhs(&k.prefix(j), p, n, false);
                let tail = if j == m {
                    ResidueValue::one(p, n)
                } else {
                    mhs(&k.reversed_suffix(j), p, n, true)
                };
                let term = head * tail;
                acc = if j % 2 == 1 { acc - term } else { acc + term };
            }
            Ok(one_pair(acc, ResidueValue::zero(p, n)))
        }),
    );

    // head/star expansion: (-1)^{m-1} Lhead(kk;t) = Ltail*(rev kk;t) + cross terms
    out.push(
        Builder::functional(
            "fneq.headstar",
            2,
            "(-1)^(m-1) L(kk;t) = Ltail*(rev kk;t) + sum_j (-1)^j L(k1..kj;t) zeta*(km..k_{j+1}) (mod p^n)",
        )
        .guard_text("all primes (unit t)")
        .grid({
            let mut g = Vec::new();
            for parts in [vec![2u32, 1], vec![1, 2], vec![1, 1, 1], vec![2, 1, 3], vec![1, 1, 2, 1]] {
                for n in [1i64, 2] {
                    g.push(
                        Params::new()
                            .with_index("kk", Index::new(parts.clone()))
                            .with_int("n", n),
                    );
                }
            }
            g
        })
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let n = pr.int("n") as u8;
            let m = k.depth();
            let t = &args[0];
            let head = fast_nested_eval(k, t, p, n, false, End::Head)?;
            let lhs = if (m - 1) % 2 == 1 { -head } else { head };
            let mut rhs = fast_nested_eval(&k.reverse(), t, p, n, true, End::Tail)?;
            for j in 1..m {
                let term = fast_nested_eval(&k.prefix(j), t, p, n, false, End::Head)?
                    * mhs(&k.reversed_suffix(j), p, n, true);
                rhs = if j % 2 == 1 { rhs - term } else { rhs + term };
            }
            Ok(one_pair(lhs, rhs))
        }),
    );

    // tail variant
    out.push(
        Builder::functional(
            "fneq.tailstar",
            2,
            "(-1)^(m-1) Ltail(kk;t) = L*(rev kk;t) + sum_j (-1)^j zeta(k1..kj) L*(km..k_{j+1};t) (mod p^n)",
        )
        .guard_text("all primes (unit t)")
        .grid({
            let mut g = Vec::new();
            for parts in [vec![2u32, 1], vec![1, 3], vec![1, 1, 1], vec![2, 2, 1]] {
                for n in [1i64, 2] {
                    g.push(
                        Params::new()
                            .with_index("kk", Index::new(parts.clone()))
                            .with_int("n", n),
                    );
                }
            }
            g
        })
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let n = pr.int("n") as u8;
            let m = k.depth();
            let t = &args[0];
            let tail = fast_nested_eval(k, t, p, n, false, End::Tail)?;
            let lhs = if (m - 1) % 2 == 1 { -tail } else { tail };
            let mut rhs = fast_nested_eval(&k.reverse(), t, p, n, true, End::Head)?;
            for j in 1..m {
                let term = mhs(&k.prefix(j), p, n, false)
                    * fast_nested_eval(&k.reversed_suffix(j), t, p, n, true, End::Head)?;
                rhs = if j % 2 == 1 { rhs - term } else { rhs + term };
            }
            Ok(one_pair(lhs, rhs))
        }),
    );

    // repeated-index slot swap
    out.push(
        Builder::functional(
            "fneq.slotswap",
            1,
            "L*({k}^m; 1..t..1) + (-1)^m L**({k}^m; mirrored slot) = 0 (mod p)",
        )
        .guard_text("p > mk+1")
        .grid({
            let mut g = Vec::new();
            for (k, m) in [(1i64, 2i64), (1, 3), (2, 2), (1, 4), (2, 3), (3, 2)] {
                for i in 1..=m {
                    g.push(
                        Params::new()
                            .with_int("k", k)
                            .with_int("m", m)
                            .with_int("i", i),
                    );
                }
            }
            g
        })
        .guard(|pr| (pr.int("m") * pr.int("k") + 1) as u64)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let (k, m, i) = (
                pr.int("k") as u32,
                pr.int("m") as usize,
                pr.int("i") as usize,
            );
            let idx = Index::repeat(k, m);
            let t = &args[0];
            let mut a1 = vec![rat_int(1); m];
            a1[i - 1] = t.clone();
            let mut a2 = vec![rat_int(1); m];
            a2[m - i] = t.clone();
            let v1 = fmp_harmonic(&idx, &a1, p, 1, false)?;
            let v2 = fmp_harmonic(&idx, &a2, p, 1, true)?;
            let lhs = if m % 2 == 1 { v1 - v2 } else { v1 + v2 };
            Ok(one_pair(lhs, ResidueValue::zero(p, 1)))
        }),
    );

    // one-variable duality (tail form), exponents 1 and 2
    out.push(
        Builder::functional(
            "fneq.dual.onevar",
            2,
            "Ltail*(kk;t) + (Ltail*((1)++kk;t) - Ltail*(kk+e1;t)) p = Ltail*(dual kk;1-t) - zeta*(dual kk) (mod p^2)",
        )
        .guard_text("all primes (unit t)")
        .grid(
            small_indices(5, 4)
                .into_iter()
                .step_by(2)
                .map(|k| Params::new().with_index("kk", k))
                .collect(),
        )
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let t = &args[0];
            let pres = ResidueValue::new(p as i128, p, 2);
            let base = fast_nested_eval(k, t, p, 2, true, End::Tail)?;
            let ext = fast_nested_eval(&k.prepend(1), t, p, 2, true, End::Tail)?;
            let bump = fast_nested_eval(&k.bump(1), t, p, 2, true, End::Tail)?;
            let lhs = base + (ext - bump) * pres;
            let dual = k.hoffman_dual();
            let s = rat_int(1) - t;
            let rhs = fast_nested_eval(&dual, &s, p, 2, true, End::Tail)? - mhs(&dual, p, 2, true);
            Ok(one_pair(lhs, rhs))
        }),
    );

    // zeta-level duality with the correction row (the t = 1 point)
    out.push(
        Builder::closed(
            "fneq.dual.zeta2",
            2,
            "zeta*(kk) + (zeta*((1)++kk) - zeta*(kk+e1)) p = -zeta*(dual kk) (mod p^2)",
        )
        // at p = 2 every star sum is 1 and the relation reads 1 = -1 mod 4
        .guard_text("p > 2")
        .grid(
            small_indices(6, 4)
                .into_iter()
                .step_by(3)
                .map(|k| Params::new().with_index("kk", k))
                .collect(),
        )
        .guard(|_| 2)
        .eval(|pr, _, p| {
            let k = pr.index("kk");
            let pres = ResidueValue::new(p as i128, p, 2);
            let lhs = mhs(k, p, 2, true)
                + (mhs(&k.prepend(1), p, 2, true) - mhs(&k.bump(1), p, 2, true)) * pres;
            let rhs = -mhs(&k.hoffman_dual(), p, 2, true);
            Ok(one_pair(lhs, rhs))
        }),
    );

    // the two headline one-variable equations at exponent 1
    out.push(
        Builder::functional(
            "fneq.main.dual",
            1,
            "Ltail*(kk;t) = Ltail*(dual kk;1-t) - zeta*(dual kk) (mod p)",
        )
        .guard_text("all primes (unit t)")
        .grid(
            small_indices(5, 4)
                .into_iter()
                .step_by(2)
                .map(|k| Params::new().with_index("kk", k))
                .collect(),
        )
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let t = &args[0];
            let lhs = fast_nested_eval(k, t, p, 1, true, End::Tail)?;
            let dual = k.hoffman_dual();
            let s = rat_int(1) - t;
            let rhs = fast_nested_eval(&dual, &s, p, 1, true, End::Tail)? - mhs(&dual, p, 1, true);
            Ok(one_pair(lhs, rhs))
        }),
    );

    out.push(
        Builder::functional(
            "fneq.main.expand",
            1,
            "(-1)^(m-1) L(kk;t) = Ltail*(rev kk;t) + sum_j (-1)^j L(k1..kj;t) zeta*(km..k_{j+1}) (mod p)",
        )
        .guard_text("all primes (unit t)")
        .grid(index_grid(&[vec![2, 1], vec![1, 1, 2], vec![3, 1]]))
        .guard(|_| 2)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let k = pr.index("kk");
            let m = k.depth();
            let t = &args[0];
            let head = fast_nested_eval(k, t, p, 1, false, End::Head)?;
            let lhs = if (m - 1) % 2 == 1 { -head } else { head };
            let mut rhs = fast_nested_eval(&k.reverse(), t, p, 1, true, End::Tail)?;
            for j in 1..m {
                let term = fast_nested_eval(&k.prefix(j), t, p, 1, false, End::Head)?
                    * mhs(&k.reversed_suffix(j), p, 1, true);
                rhs = if j % 2 == 1 { rhs - term } else { rhs + term };
            }
            Ok(one_pair(lhs, rhs))
        }),
    );

    out
}

/// The reversed-suffix star factor L**(km..k_{j+1}; tm..t_{j+1}).
fn rev_tail_star(k: &Index, args: &[Rational], j: usize, p: u64, n: u8) -> ModResult<ResidueValue> {
    let idx = k.reversed_suffix(j);
    let rev_args: Vec<Rational> = args[j..].iter().rev().cloned().collect();
    fmp_harmonic(&idx, &rev_args, p, n, true)
}

/// Shuffle-star sum over {1}^{weight} with the given per-slot arguments;
/// the index argument carries the dual grouping only for its weight.
fn shuffle_star_grouped(dual: &Index, args: &[Rational], p: u64) -> ModResult<ResidueValue> {
    // the grouped identity evaluates the shuffle-star sum with denominator
    // powers given by the dual index entries
    crate::eval::fmp_shuffle(dual, args, p, 2, true)
}
