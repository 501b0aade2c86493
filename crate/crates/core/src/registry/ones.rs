//! The all-ones-index machinery: expressing depth-m polylogarithms of index
//! {1}^m through the depth-1 polylogarithm, the root-of-unity distribution
//! relations, and the n = -1 reflection specializations.

use super::*;
use crate::eval::{fast_nested_eval, fmp_harmonic_res, End};
use crate::modular::{element_of_order, reduce_rational};

fn m_grid(lo: i64, hi: i64) -> Vec<Params> {
    (lo..=hi).map(|m| Params::new().with_int("m", m)).collect()
}

/// depth-1 polylogarithm at a residue argument, mod p
fn fp_res(m: u32, t: ResidueValue, p: u64) -> ModResult<ResidueValue> {
    fmp_harmonic_res(&Index::single(m), &[t], p, 1, false)
}

/// head/tail forms of {1}^m at a residue argument
fn ones_res(m: usize, t: ResidueValue, p: u64, star: bool, end: End) -> ModResult<ResidueValue> {
    let mut args = vec![ResidueValue::one(p, 1); m];
    match end {
        End::Head => args[0] = t,
        End::Tail => args[m - 1] = t,
    }
    fmp_harmonic_res(&Index::repeat(1, m), &args, p, 1, star)
}

pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();

    // Ltail*({1}^m; t) = L_m(1-t)  (mod p)
    out.push(
        Builder::functional("ones.tailstar", 1, "Ltail*({1}^m;t) = L_m(1-t) (mod p)")
            .guard_text("p > m+1")
            .grid(m_grid(1, 5))
            .guard(|pr| (pr.int("m") + 1) as u64)
            .arguments(|_, p| sample_tuples(1, p))
            .eval(|pr, args, p| {
                let m = pr.int("m") as usize;
                let t = &args[0];
                let lhs = fast_nested_eval(&Index::repeat(1, m), t, p, 1, true, End::Tail)?;
                let s = rat_int(1) - t;
                let rhs = fast_nested_eval(&Index::single(m as u32), &s, p, 1, false, End::Head)?;
                Ok(one_pair(lhs, rhs))
            }),
    );

    // L({1}^m; t) = (-1)^(m-1) L_m(1-t)  (mod p)
    out.push(
        Builder::functional("ones.head", 1, "L({1}^m;t) = (-1)^(m-1) L_m(1-t) (mod p)")
            .guard_text("p > m+1")
            .grid(m_grid(1, 5))
            .guard(|pr| (pr.int("m") + 1) as u64)
            .arguments(|_, p| sample_tuples(1, p))
            .eval(|pr, args, p| {
                let m = pr.int("m") as usize;
                let t = &args[0];
                let lhs = fast_nested_eval(&Index::repeat(1, m), t, p, 1, false, End::Head)?;
                let s = rat_int(1) - t;
                let v = fast_nested_eval(&Index::single(m as u32), &s, p, 1, false, End::Head)?;
                let rhs = if (m - 1) % 2 == 1 { -v } else { v };
                Ok(one_pair(lhs, rhs))
            }),
    );

    // distribution relation for the depth-1 polylogarithm:
    // L_m(t^n) = n^(m-1) sum_k (1-t^(np))/(1-(z^k t)^p) L_m(z^k t), z of order |n|
    out.push(
        Builder::functional(
            "dist.fp",
            1,
            "L_m(t^n) = n^(m-1) sum over order-|n| roots z of (1-t^(np))/(1-(z t)^p) L_m(z t) (mod p)",
        )
        .guard_text("p > m+1, p = 1 mod |n|")
        .cap(101)
        .grid({
            let mut g = Vec::new();
            for n in [-1i64, 2, 3, 4] {
                for m in 1..=3i64 {
                    g.push(Params::new().with_int("n", n).with_int("m", m));
                }
            }
            g
        })
        .guard(|pr| (pr.int("m") + 1) as u64)
        .admissible(|pr, p| (p - 1) % pr.int("n").unsigned_abs() == 0)
        .arguments(|pr, p| dist_args(pr, p, true))
        .eval(|pr, args, p| {
            let (n, m) = (pr.int("n"), pr.int("m") as u32);
            let t = reduce_rational(&args[0], p, 1)?;
            let lhs = fp_res(m, t.powi(n)?, p)?;
            let rhs = dist_sum(n, p, |z| {
                let zt = z * t;
                let num = ResidueValue::one(p, 1) - t.powi(n)?.pow(p);
                let den = ResidueValue::one(p, 1) - zt.pow(p);
                Ok(num.div(den)? * fp_res(m, zt, p)?)
            })?;
            let rhs = scale_power(rhs, n, m, p)?;
            Ok(one_pair(lhs, rhs))
        }),
    );

    // the four {1}^m distribution relations
    out.push(
        Builder::functional(
            "dist.ones.head",
            1,
            "L({1}^m; 1-t^n) = n^(m-1) sum_z (1-t^(np))/(1-(z t)^p) L({1}^m; 1-z t) (mod p)",
        )
        .guard_text("p > m+1, p = 1 mod |n|")
        .cap(101)
        .grid(dist_grid())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .admissible(|pr, p| (p - 1) % pr.int("n").unsigned_abs() == 0)
        .arguments(|pr, p| dist_args(pr, p, true))
        .eval(|pr, args, p| {
            let (n, m) = (pr.int("n"), pr.int("m") as usize);
            let one = ResidueValue::one(p, 1);
            let t = reduce_rational(&args[0], p, 1)?;
            let lhs = ones_res(m, one - t.powi(n)?, p, false, End::Head)?;
            let rhs = dist_sum(n, p, |z| {
                let zt = z * t;
                let num = one - t.powi(n)?.pow(p);
                let den = one - zt.pow(p);
                Ok(num.div(den)? * ones_res(m, one - zt, p, false, End::Head)?)
            })?;
            Ok(one_pair(lhs, scale_power(rhs, n, m as u32, p)?))
        }),
    );

    out.push(
        Builder::functional(
            "dist.ones.tail",
            1,
            "Ltail({1}^m; 1/(1-t^n)) = n^(m-1) sum_z Ltail({1}^m; 1/(1-z t)) (mod p)",
        )
        .guard_text("p > m+1, p = 1 mod |n|")
        .cap(101)
        .grid(dist_grid())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .admissible(|pr, p| (p - 1) % pr.int("n").unsigned_abs() == 0)
        .arguments(|pr, p| dist_args(pr, p, false))
        .eval(|pr, args, p| {
            let (n, m) = (pr.int("n"), pr.int("m") as usize);
            let one = ResidueValue::one(p, 1);
            let t = reduce_rational(&args[0], p, 1)?;
            let lhs = ones_res(m, (one - t.powi(n)?).inv()?, p, false, End::Tail)?;
            let rhs = dist_sum(n, p, |z| {
                let zt = z * t;
                ones_res(m, (one - zt).inv()?, p, false, End::Tail)
            })?;
            Ok(one_pair(lhs, scale_power(rhs, n, m as u32, p)?))
        }),
    );

    out.push(
        Builder::functional(
            "dist.ones.headstar",
            1,
            "L*({1}^m; 1/(1-t^n)) = n^(m-1) sum_z L*({1}^m; 1/(1-z t)) (mod p)",
        )
        .guard_text("p > m+1, p = 1 mod |n|")
        .cap(101)
        .grid(dist_grid())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .admissible(|pr, p| (p - 1) % pr.int("n").unsigned_abs() == 0)
        .arguments(|pr, p| dist_args(pr, p, false))
        .eval(|pr, args, p| {
            let (n, m) = (pr.int("n"), pr.int("m") as usize);
            let one = ResidueValue::one(p, 1);
            let t = reduce_rational(&args[0], p, 1)?;
            let lhs = ones_res(m, (one - t.powi(n)?).inv()?, p, true, End::Head)?;
            let rhs = dist_sum(n, p, |z| {
                let zt = z * t;
                ones_res(m, (one - zt).inv()?, p, true, End::Head)
            })?;
            Ok(one_pair(lhs, scale_power(rhs, n, m as u32, p)?))
        }),
    );

    out.push(
        Builder::functional(
            "dist.ones.tailstar",
            1,
            "Ltail*({1}^m; 1-t^n) = n^(m-1) sum_z (1-t^(np))/(1-(z t)^p) Ltail*({1}^m; 1-z t) (mod p)",
        )
        .guard_text("p > m+1, p = 1 mod |n|")
        .cap(101)
        .grid(dist_grid())
        .guard(|pr| (pr.int("m") + 1) as u64)
        .admissible(|pr, p| (p - 1) % pr.int("n").unsigned_abs() == 0)
        .arguments(|pr, p| dist_args(pr, p, true))
        .eval(|pr, args, p| {
            let (n, m) = (pr.int("n"), pr.int("m") as usize);
            let one = ResidueValue::one(p, 1);
            let t = reduce_rational(&args[0], p, 1)?;
            let lhs = ones_res(m, one - t.powi(n)?, p, true, End::Tail)?;
            let rhs = dist_sum(n, p, |z| {
                let zt = z * t;
                let num = one - t.powi(n)?.pow(p);
                let den = one - zt.pow(p);
                Ok(num.div(den)? * ones_res(m, one - zt, p, true, End::Tail)?)
            })?;
            Ok(one_pair(lhs, scale_power(rhs, n, m as u32, p)?))
        }),
    );

    // n = -1 reflections
    out.push(
        Builder::functional(
            "dist.reflect.tail",
            1,
            "Ltail({1}^m;t) = (-1)^(m-1) Ltail({1}^m;1-t) (mod p)",
        )
        .guard_text("p > m+1")
        .grid(m_grid(1, 5))
        .guard(|pr| (pr.int("m") + 1) as u64)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let m = pr.int("m") as usize;
            let t = &args[0];
            let lhs = fast_nested_eval(&Index::repeat(1, m), t, p, 1, false, End::Tail)?;
            let s = rat_int(1) - t;
            let v = fast_nested_eval(&Index::repeat(1, m), &s, p, 1, false, End::Tail)?;
            let rhs = if (m - 1) % 2 == 1 { -v } else { v };
            Ok(one_pair(lhs, rhs))
        }),
    );

    out.push(
        Builder::functional(
            "dist.reflect.headstar",
            1,
            "L*({1}^m;t) = (-1)^(m-1) L*({1}^m;1-t) (mod p)",
        )
        .guard_text("p > m+1")
        .grid(m_grid(1, 5))
        .guard(|pr| (pr.int("m") + 1) as u64)
        .arguments(|_, p| sample_tuples(1, p))
        .eval(|pr, args, p| {
            let m = pr.int("m") as usize;
            let t = &args[0];
            let lhs = fast_nested_eval(&Index::repeat(1, m), t, p, 1, true, End::Head)?;
            let s = rat_int(1) - t;
            let v = fast_nested_eval(&Index::repeat(1, m), &s, p, 1, true, End::Head)?;
            let rhs = if (m - 1) % 2 == 1 { -v } else { v };
            Ok(one_pair(lhs, rhs))
        }),
    );

    out
}

fn dist_grid() -> Vec<Params> {
    let mut g = Vec::new();
    for n in [-1i64, 2, 3, 4] {
        for m in 1..=3i64 {
            g.push(Params::new().with_int("n", n).with_int("m", m));
        }
    }
    g
}

/// Sample arguments for the distribution entries; every derived quantity
/// (t^n, 1-t^n, 1-z^k t, their p-th powers) must be a unit where inverted.
fn dist_args(pr: &Params, p: u64, needs_frobenius_denominator: bool) -> Vec<Vec<Rational>> {
    let n = pr.int("n");
    let mut out = Vec::new();
    let Some(z) = element_of_order(n.unsigned_abs(), p) else {
        return out;
    };
    let z = ResidueValue::new(z as i128, p, 1);
    'outer: for t in unit_samples(p) {
        let tr = match reduce_rational(&t, p, 1) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let Ok(tn) = tr.powi(n) else { continue };
        let one = ResidueValue::one(p, 1);
        if (one - tn).is_zero() {
            continue;
        }
        let mut zk = one;
        for _ in 0..n.unsigned_abs() {
            let zt = zk * tr;
            if (one - zt).is_zero() {
                continue 'outer;
            }
            if needs_frobenius_denominator && (one - zt.pow(p)).is_zero() {
                continue 'outer;
            }
            zk = zk * z;
        }
        out.push(vec![t]);
    }
    out
}

/// sum over the order-|n| roots of unity z^k, k = 0..|n|-1
fn dist_sum(
    n: i64,
    p: u64,
    mut f: impl FnMut(ResidueValue) -> ModResult<ResidueValue>,
) -> ModResult<ResidueValue> {
    let d = n.unsigned_abs();
    let z0 = element_of_order(d, p).ok_or(ModError::Guard {
        requirement: format!("p = 1 mod {d}"),
    })?;
    let z0 = ResidueValue::new(z0 as i128, p, 1);
    let mut acc = ResidueValue::zero(p, 1);
    let mut zk = ResidueValue::one(p, 1);
    for _ in 0..d {
        acc = acc + f(zk)?;
        zk = zk * z0;
    }
    Ok(acc)
}

/// multiply by n^(m-1) (n may be negative)
fn scale_power(x: ResidueValue, n: i64, m: u32, p: u64) -> ModResult<ResidueValue> {
    let factor = ResidueValue::new(n as i128, p, 1).pow((m - 1) as u64);
    Ok(x * factor)
}
