//! The catalog of binomial-sum polynomial identities behind the finite
//! polylogarithm functional equations, verified by exact expansion of both
//! sides. Every check here is a literal nested summation compared
//! coefficient-by-coefficient; no identity is assumed.

use std::collections::HashMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::exact::{binomial_rat, rat_int, Rational};
use crate::index::Index;
use crate::poly::{MultiPoly, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyIdError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{id}` requires parameter {param}")]
    MissingParam { id: String, param: &'static str },
    #[error("parameter out of guard: {0}")]
    Guard(String),
    #[error("subset entry {0} out of range 1..depth")]
    BadSubset(usize),
}

pub const MAX_N: u32 = 6;
pub const MAX_WEIGHT: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One identity family: id, parameter shape, and a one-line statement.
#[derive(Debug, Clone)]
pub struct PolyIdentity {
    pub id: &'static str,
    pub statement: &'static str,
    pub takes_index: bool,
    pub takes_subset: bool,
}

pub fn catalog() -> Vec<PolyIdentity> {
    fn entry(
        id: &'static str,
        statement: &'static str,
        takes_index: bool,
        takes_subset: bool,
    ) -> PolyIdentity {
        PolyIdentity {
            id,
            statement,
            takes_index,
            takes_subset,
        }
    }
    vec![
        entry("euler", "sum (-1)^(n-1) C(N,n)/n = sum 1/n", false, false),
        entry(
            "seed.alt",
            "sum (-1)^n C(N,n) t^n/n = sum ((1-t)^n - 1)/n",
            false,
            false,
        ),
        entry(
            "seed.plain",
            "sum t^n/n = sum (-1)^n C(N,n) ((1-t)^n - 1)/n",
            false,
            false,
        ),
        entry("intop.power", "I_t(t^n) = t^n/n", false, false),
        entry(
            "intop.shifted",
            "I_t((1-t)^n - 1) = sum_j ((1-t)^j - 1)/j",
            false,
            false,
        ),
        entry(
            "jstar.power",
            "J*(t^n) = sum_j t^(n-j) s^j / j",
            false,
            false,
        ),
        entry(
            "jstar.shifted",
            "J*((1-t)^n - 1) = sum_j (1-t)^(n-j)((1-s)^j - 1)/j",
            false,
            false,
        ),
        entry(
            "jn.power",
            "J^N(t^n) = sum_(j=n+1..N) s^j t^(n-j)/j",
            false,
            false,
        ),
        entry(
            "jn.shifted",
            "J^N((1-t)^n - 1) = -sum_j (1-t)^(n-j)((1-s)^j-1)/j + (sum_j (s/t)^j/j)((1-t)^n - 1)",
            false,
            false,
        ),
        entry(
            "binom.double",
            "sum_(k=j..n) C(n,k) C(k,j) t^k = C(n,j) t^j (1+t)^(n-j)",
            false,
            false,
        ),
        entry(
            "dualsum.star.alt",
            "weakly-decreasing shuffle sum with (-1)^(n1) C(N,n1) = plain weight-deep (1-t) block sum",
            true,
            false,
        ),
        entry(
            "dualsum.star.plain",
            "plain weakly-decreasing shuffle sum = weight-deep (1-t) block sum with (-1)^(n1) C(N,n1)",
            true,
            false,
        ),
        entry(
            "dualsum.strict.alt",
            "strict ratio sum with (-1)^(nm) C(N,nm) = signed (1-t) block sums with cross products",
            true,
            false,
        ),
        entry(
            "dualsum.strict.plain",
            "plain strict ratio sum = signed binomial (1-t) block sums with cross products",
            true,
            false,
        ),
        entry(
            "dualsum.subst",
            "the star/alt identity specialized at t_i = 1 over a subset, regrouped through the dual index",
            true,
            true,
        ),
        entry(
            "dualsum.onevar",
            "one-variable specialization through the Hoffman dual",
            true,
            false,
        ),
        entry(
            "antipode.poly",
            "sum_j (-1)^j (strict head sum)(weakly-decreasing reversed tail sum) telescopes to zero",
            true,
            false,
        ),
    ]
}

/// Description of one nested truncated sum of monomial products.
struct NestedSum<'a> {
    vars: &'a Arc<VarSet>,
    n_upper: u32,
    depth: usize,
    strict: bool,
    /// denominator exponents per summation position
    powers: Vec<u32>,
    /// include (-1)^{n_i} C(N, n_i) at this 0-based position
    binom_at: Option<usize>,
    /// t_var ^ (sum of signed summation variables)
    plain: Vec<(usize, Vec<(usize, i32)>)>,
    /// (1 - t_var) ^ (sum of signed summation variables)
    shifted: Vec<(usize, Vec<(usize, i32)>)>,
    /// ((1 - t_var)^{n_idx} - 1)
    shifted_minus_one: Option<(usize, usize)>,
}

/// Cache of (1 - t_v)^e polynomials per variable.
struct ShiftCache<'a> {
    vars: &'a Arc<VarSet>,
    cache: HashMap<(usize, u32), MultiPoly>,
}

impl<'a> ShiftCache<'a> {
    fn new(vars: &'a Arc<VarSet>) -> Self {
        ShiftCache {
            vars,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, v: usize, e: u32) -> MultiPoly {
        if let Some(p) = self.cache.get(&(v, e)) {
            return p.clone();
        }
        let p = if e == 0 {
            MultiPoly::one(self.vars)
        } else {
            let lower = self.get(v, e - 1);
            lower.sub(&lower.mul(&MultiPoly::var(self.vars, v)))
        };
        self.cache.insert((v, e), p.clone());
        p
    }
}

impl NestedSum<'_> {
    fn build(&self) -> MultiPoly {
        assert_eq!(self.powers.len(), self.depth);
        let mut acc = MultiPoly::zero(self.vars);
        let mut tuple = vec![0u32; self.depth];
        let mut cache = ShiftCache::new(self.vars);
        self.walk(0, &mut tuple, &mut acc, &mut cache);
        acc
    }

    fn walk(&self, pos: usize, tuple: &mut Vec<u32>, acc: &mut MultiPoly, cache: &mut ShiftCache) {
        if pos == self.depth {
            self.emit(tuple, acc, cache);
            return;
        }
        let hi = if pos == 0 {
            self.n_upper
        } else if self.strict {
            tuple[pos - 1].saturating_sub(1)
        } else {
            tuple[pos - 1]
        };
        for n in 1..=hi {
            tuple[pos] = n;
            self.walk(pos + 1, tuple, acc, cache);
        }
    }

    fn eval_linexp(&self, lin: &[(usize, i32)], tuple: &[u32]) -> i32 {
        lin.iter()
            .map(|&(idx, sign)| sign * tuple[idx - 1] as i32)
            .sum()
    }

    fn emit(&self, tuple: &[u32], acc: &mut MultiPoly, cache: &mut ShiftCache) {
        let mut coeff = Rational::one();
        for (i, &n) in tuple.iter().enumerate() {
            coeff /= rat_int(n as i64).pow(self.powers[i] as i32);
        }
        if let Some(i) = self.binom_at {
            let n = tuple[i];
            let sign = if n % 2 == 0 { 1 } else { -1 };
            coeff *= binomial_rat(self.n_upper as u64, n as i64) * rat_int(sign);
        }
        let mut exps = vec![0i32; self.vars.len()];
        for (v, lin) in &self.plain {
            exps[*v] += self.eval_linexp(lin, tuple);
        }
        let mut term =
            MultiPoly::monomial(self.vars, &exps, coeff).expect("builder exponent invariant");
        for (v, lin) in &self.shifted {
            let e = self.eval_linexp(lin, tuple);
            assert!(e >= 0, "shifted factor exponent must be nonnegative");
            term = term.mul(&cache.get(*v, e as u32));
        }
        if let Some((v, idx)) = self.shifted_minus_one {
            let e = tuple[idx - 1];
            let block = cache.get(v, e).sub(&MultiPoly::one(self.vars));
            term = term.mul(&block);
        }
        *acc = acc.add(&term);
    }
}

fn ratio_plain_factors(m: usize, j: usize) -> Vec<(usize, Vec<(usize, i32)>)> {
    // (t_1/t_2)^{n_1} (t_2/t_3)^{n_2} ... (t_j/t_{j+1})^{n_j}, collected per
    // variable; when j = m the trailing factor is plain t_m^{n_m}.
    let mut out: Vec<(usize, Vec<(usize, i32)>)> = Vec::new();
    if j == m {
        for v in 0..m {
            let mut lin = vec![(v + 1, 1)];
            if v > 0 {
                lin.push((v, -1));
            }
            out.push((v, lin));
        }
    } else {
        for v in 0..=j {
            let mut lin = Vec::new();
            if v < j {
                lin.push((v + 1, 1));
            }
            if v > 0 {
                lin.push((v, -1));
            }
            out.push((v, lin));
        }
    }
    out
}

fn shuffle_plain_factors(m: usize) -> Vec<(usize, Vec<(usize, i32)>)> {
    // t_1^{n_1-n_2} ... t_{m-1}^{n_{m-1}-n_m} t_m^{n_m}
    (0..m)
        .map(|v| {
            let mut lin = vec![(v + 1, 1)];
            if v + 1 < m {
                lin.push((v + 2, -1));
            }
            (v, lin)
        })
        .collect()
}

/// The (1-t) block sum shared by the grouped identities: depth `ls[last]`,
/// slot variable `slot_vars[i]` carries `(1-t)^{n_{ls[i]} - n_{ls[i]+1}}`,
/// the final variable carries `(1-t)^{n_{ls[last]}} - 1`.
#[allow(clippy::too_many_arguments)]
fn grouped_block<'a>(
    vars: &'a Arc<VarSet>,
    n_upper: u32,
    slot_vars: &[usize],
    last_var: usize,
    ls: &[u32],
    powers: Vec<u32>,
    binom: bool,
) -> NestedSum<'a> {
    let depth = powers.len();
    assert_eq!(ls.len(), slot_vars.len() + 1);
    assert_eq!(*ls.last().unwrap() as usize, depth);
    let shifted = slot_vars
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, vec![(ls[i] as usize, 1), (ls[i] as usize + 1, -1)]))
        .collect();
    NestedSum {
        vars,
        n_upper,
        depth,
        strict: false,
        powers,
        binom_at: if binom { Some(0) } else { None },
        plain: Vec::new(),
        shifted,
        shifted_minus_one: Some((last_var, depth)),
    }
}

fn guard(n_upper: u32, index: Option<&Index>) -> Result<(), PolyIdError> {
    if !(1..=MAX_N).contains(&n_upper) {
        return Err(PolyIdError::Guard(format!(
            "N must lie in 1..={MAX_N}, got {n_upper}"
        )));
    }
    if let Some(k) = index {
        if k.weight() > MAX_WEIGHT {
            return Err(PolyIdError::Guard(format!(
                "index weight must be <= {MAX_WEIGHT}, got {}",
                k.weight()
            )));
        }
    }
    Ok(())
}

/// Builds one side of a named identity. `extra` carries the scalar parameter
/// for the operator lemmas (`n`, and `j` for `binom.double` packed as n*100+j).
pub fn build_side(
    id: &str,
    side: Side,
    n_upper: u32,
    index: Option<&Index>,
    subset: Option<&[usize]>,
    extra: Option<u32>,
) -> Result<MultiPoly, PolyIdError> {
    guard(n_upper, index)?;
    let need_index = || {
        index.cloned().ok_or(PolyIdError::MissingParam {
            id: id.into(),
            param: "index",
        })
    };
    match id {
        "euler" => {
            let vars = VarSet::new(&[]);
            let mut acc = Rational::zero();
            for n in 1..=n_upper {
                match side {
                    Side::Left => {
                        let sign = if n % 2 == 1 { 1 } else { -1 };
                        acc += binomial_rat(n_upper as u64, n as i64) * rat_int(sign)
                            / rat_int(n as i64);
                    }
                    Side::Right => acc += rat_int(1) / rat_int(n as i64),
                }
            }
            Ok(MultiPoly::constant(&vars, acc))
        }
        "seed.alt" | "seed.plain" => {
            let vars = VarSet::new(&["t"]);
            let mut cache = ShiftCache::new(&vars);
            let alt = id == "seed.alt";
            let mut acc = MultiPoly::zero(&vars);
            for n in 1..=n_upper {
                let inv_n = rat_int(1) / rat_int(n as i64);
                let signed = |c: Rational| {
                    if n % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                };
                let term = match (side, alt) {
                    (Side::Left, true) => MultiPoly::monomial(
                        &vars,
                        &[n as i32],
                        signed(binomial_rat(n_upper as u64, n as i64) * &inv_n),
                    )
                    .unwrap(),
                    (Side::Right, true) | (Side::Left, false) => {
                        let block = cache.get(0, n).sub(&MultiPoly::one(&vars));
                        if alt {
                            block.scale(&inv_n)
                        } else {
                            MultiPoly::monomial(&vars, &[n as i32], inv_n.clone()).unwrap()
                        }
                    }
                    (Side::Right, false) => {
                        let block = cache.get(0, n).sub(&MultiPoly::one(&vars));
                        block.scale(&signed(binomial_rat(n_upper as u64, n as i64) * &inv_n))
                    }
                };
                acc = acc.add(&term);
            }
            Ok(acc)
        }
        "intop.power" | "intop.shifted" => {
            let n = extra.ok_or(PolyIdError::MissingParam {
                id: id.into(),
                param: "n",
            })?;
            let vars = VarSet::new(&["t"]);
            let t = MultiPoly::var(&vars, 0);
            let one = MultiPoly::one(&vars);
            let mut cache = ShiftCache::new(&vars);
            let input = if id == "intop.power" {
                t.pow(n)
            } else {
                cache.get(0, n).sub(&one)
            };
            Ok(match side {
                Side::Left => input.op_i(0).expect("inputs have no constant term"),
                Side::Right => {
                    if id == "intop.power" {
                        t.pow(n).scale(&(rat_int(1) / rat_int(n as i64)))
                    } else {
                        let mut acc = MultiPoly::zero(&vars);
                        for j in 1..=n {
                            acc = acc.add(
                                &cache
                                    .get(0, j)
                                    .sub(&one)
                                    .scale(&(rat_int(1) / rat_int(j as i64))),
                            );
                        }
                        acc
                    }
                }
            })
        }
        "jstar.power" | "jstar.shifted" => {
            let n = extra.ok_or(PolyIdError::MissingParam {
                id: id.into(),
                param: "n",
            })?;
            let vars = VarSet::new(&["t", "s"]);
            let t = MultiPoly::var(&vars, 0);
            let s = MultiPoly::var(&vars, 1);
            let one = MultiPoly::one(&vars);
            let mut cache = ShiftCache::new(&vars);
            let shifted = id == "jstar.shifted";
            let input = if shifted {
                cache.get(0, n).sub(&one)
            } else {
                t.pow(n)
            };
            Ok(match side {
                Side::Left => input.op_j_star(0, 1),
                Side::Right => {
                    let mut acc = MultiPoly::zero(&vars);
                    for j in 1..=n {
                        let inv_j = rat_int(1) / rat_int(j as i64);
                        let term = if shifted {
                            // (1-t)^{n-j} ((1-s)^j - 1)/j
                            let sblock = {
                                let mut x = one.clone();
                                for _ in 0..j {
                                    x = x.sub(&x.mul(&s));
                                }
                                x.sub(&one)
                            };
                            cache.get(0, n - j).mul(&sblock).scale(&inv_j)
                        } else {
                            t.pow(n - j).mul(&s.pow(j)).scale(&inv_j)
                        };
                        acc = acc.add(&term);
                    }
                    acc
                }
            })
        }
        "jn.power" | "jn.shifted" => {
            let n = extra.ok_or(PolyIdError::MissingParam {
                id: id.into(),
                param: "n",
            })?;
            let vars = VarSet::with_laurent(&["t", "s"], &[true, false]);
            let t = MultiPoly::var(&vars, 0);
            let s = MultiPoly::var(&vars, 1);
            let one = MultiPoly::one(&vars);
            let mut cache = ShiftCache::new(&vars);
            let shifted = id == "jn.shifted";
            let input = if shifted {
                cache.get(0, n).sub(&one)
            } else {
                t.pow(n)
            };
            Ok(match side {
                Side::Left => input.op_j_n(0, 1, n_upper).expect("t is Laurent"),
                Side::Right => {
                    if !shifted {
                        let mut acc = MultiPoly::zero(&vars);
                        for j in (n as i32 + 1)..=(n_upper as i32) {
                            acc = acc.add(
                                &MultiPoly::monomial(
                                    &vars,
                                    &[n as i32 - j, j],
                                    rat_int(1) / rat_int(j as i64),
                                )
                                .unwrap(),
                            );
                        }
                        acc
                    } else {
                        let mut acc = MultiPoly::zero(&vars);
                        for j in 1..=n {
                            let sblock = {
                                let mut x = one.clone();
                                for _ in 0..j {
                                    x = x.sub(&x.mul(&s));
                                }
                                x.sub(&one)
                            };
                            acc = acc.sub(
                                &cache
                                    .get(0, n - j)
                                    .mul(&sblock)
                                    .scale(&(rat_int(1) / rat_int(j as i64))),
                            );
                        }
                        let mut ratio_sum = MultiPoly::zero(&vars);
                        for j in 1..=n_upper as i32 {
                            ratio_sum = ratio_sum.add(
                                &MultiPoly::monomial(
                                    &vars,
                                    &[-j, j],
                                    rat_int(1) / rat_int(j as i64),
                                )
                                .unwrap(),
                            );
                        }
                        acc.add(&ratio_sum.mul(&cache.get(0, n).sub(&one)))
                    }
                }
            })
        }
        "binom.double" => {
            let packed = extra.ok_or(PolyIdError::MissingParam {
                id: id.into(),
                param: "n*100+j",
            })?;
            let (n, j) = (packed / 100, packed % 100);
            if j > n {
                return Err(PolyIdError::Guard(format!("need j <= n, got j={j} n={n}")));
            }
            let vars = VarSet::new(&["t"]);
            let t = MultiPoly::var(&vars, 0);
            let one = MultiPoly::one(&vars);
            Ok(match side {
                Side::Left => {
                    let mut acc = MultiPoly::zero(&vars);
                    for k in j..=n {
                        let c = binomial_rat(n as u64, k as i64) * binomial_rat(k as u64, j as i64);
                        acc = acc.add(&MultiPoly::monomial(&vars, &[k as i32], c).unwrap());
                    }
                    acc
                }
                Side::Right => t
                    .pow(j)
                    .mul(&one.add(&t).pow(n - j))
                    .scale(&binomial_rat(n as u64, j as i64)),
            })
        }
        "dualsum.star.alt" | "dualsum.star.plain" => {
            let k = need_index()?;
            let m = k.depth();
            let w = k.weight() as usize;
            let alt = id == "dualsum.star.alt";
            let vars = VarSet::t_vars(m, None);
            Ok(match side {
                Side::Left => NestedSum {
                    vars: &vars,
                    n_upper,
                    depth: m,
                    strict: false,
                    powers: k.parts().to_vec(),
                    binom_at: if alt { Some(0) } else { None },
                    plain: shuffle_plain_factors(m),
                    shifted: Vec::new(),
                    shifted_minus_one: None,
                }
                .build(),
                Side::Right => {
                    let ls = k.partial_sums();
                    let slot_vars: Vec<usize> = (0..m - 1).collect();
                    grouped_block(&vars, n_upper, &slot_vars, m - 1, &ls, vec![1; w], !alt).build()
                }
            })
        }
        "dualsum.strict.alt" | "dualsum.strict.plain" => {
            let k = need_index()?;
            let m = k.depth();
            let alt = id == "dualsum.strict.alt";
            let vars = VarSet::t_vars(m, if m > 1 { Some(1) } else { None });
            let rev = k.reverse();
            let ls_rev = rev.partial_sums(); // l_1 = k_m, l_2 = k_m + k_{m-1}, ...
            Ok(match side {
                Side::Left => NestedSum {
                    vars: &vars,
                    n_upper,
                    depth: m,
                    strict: true,
                    powers: k.parts().to_vec(),
                    binom_at: if alt { Some(m - 1) } else { None },
                    plain: ratio_plain_factors(m, m),
                    shifted: Vec::new(),
                    shifted_minus_one: None,
                }
                .build(),
                Side::Right => {
                    // main block: depth w, slots t_m ... t_2, closer t_1
                    let mut acc = {
                        let slot_vars: Vec<usize> = (1..m).rev().collect();
                        let ls = &ls_rev;
                        let block = grouped_block(
                            &vars,
                            n_upper,
                            &slot_vars,
                            0,
                            ls,
                            vec![1; k.weight() as usize],
                            !alt,
                        )
                        .build();
                        if (m - 1) % 2 == 1 {
                            block.neg()
                        } else {
                            block
                        }
                    };
                    // cross terms
                    for j in 1..m {
                        let head = NestedSum {
                            vars: &vars,
                            n_upper,
                            depth: j,
                            strict: true,
                            powers: k.parts()[..j].to_vec(),
                            binom_at: None,
                            plain: ratio_plain_factors(m, j),
                            shifted: Vec::new(),
                            shifted_minus_one: None,
                        }
                        .build();
                        let d = m - j; // tail depth in grouped variables
                        let slot_vars: Vec<usize> = ((m - d + 1)..m).rev().collect();
                        let ls = &ls_rev[..d];
                        let tail = grouped_block(
                            &vars,
                            n_upper,
                            &slot_vars,
                            m - d,
                            ls,
                            vec![1; ls[d - 1] as usize],
                            !alt,
                        )
                        .build();
                        let prod = head.mul(&tail);
                        let sign = (m - j - 1) % 2 == 1;
                        acc = if sign { acc.sub(&prod) } else { acc.add(&prod) };
                    }
                    acc
                }
            })
        }
        "dualsum.onevar" => {
            let k = need_index()?;
            let m = k.depth();
            let vars = VarSet::new(&["t"]);
            Ok(match side {
                Side::Left => NestedSum {
                    vars: &vars,
                    n_upper,
                    depth: m,
                    strict: false,
                    powers: k.parts().to_vec(),
                    binom_at: Some(0),
                    plain: vec![(0, vec![(m, 1)])],
                    shifted: Vec::new(),
                    shifted_minus_one: None,
                }
                .build(),
                Side::Right => {
                    let dual = k.hoffman_dual();
                    let md = dual.depth();
                    NestedSum {
                        vars: &vars,
                        n_upper,
                        depth: md,
                        strict: false,
                        powers: dual.parts().to_vec(),
                        binom_at: None,
                        plain: Vec::new(),
                        shifted: Vec::new(),
                        shifted_minus_one: Some((0, md)),
                    }
                    .build()
                }
            })
        }
        "dualsum.subst" => {
            let k = need_index()?;
            let m = k.depth();
            let subset = subset.unwrap_or(&[]);
            for &i in subset {
                if i < 1 || i >= m {
                    return Err(PolyIdError::BadSubset(i));
                }
            }
            let vars = VarSet::t_vars(m, None);
            match side {
                Side::Left => {
                    // the star/alt left side with t_i := 1 over the subset
                    let mut lhs = build_side(
                        "dualsum.star.alt",
                        Side::Left,
                        n_upper,
                        Some(&k),
                        None,
                        None,
                    )?;
                    for &i in subset {
                        lhs = lhs.subst_value(i - 1, &rat_int(1));
                    }
                    Ok(lhs)
                }
                Side::Right => {
                    let in_subset = |i: usize| subset.contains(&i);
                    let complement: Vec<usize> = (1..m).filter(|&i| !in_subset(i)).collect();
                    // grouped index: sum the entries between consecutive
                    // subset positions, then dualize
                    let mut grouped = Vec::new();
                    let mut acc = 0u32;
                    for (i, &ki) in k.parts().iter().enumerate() {
                        acc += ki;
                        if in_subset(i + 1) {
                            grouped.push(acc);
                            acc = 0;
                        }
                    }
                    grouped.push(acc);
                    let dual = Index::new(grouped).hoffman_dual();
                    let md = dual.depth();
                    let ls = k.partial_sums();
                    // non-1 slot positions: q_i = l_{j_i} - j_i + i inside
                    // the depth-m' sum, paired with variable t_{j_i}
                    let shifted: Vec<(usize, Vec<(usize, i32)>)> = complement
                        .iter()
                        .enumerate()
                        .map(|(i0, &ji)| {
                            let q = ls[ji - 1] as usize - ji + (i0 + 1);
                            assert!(q < md, "slot position out of range");
                            (ji - 1, vec![(q, 1), (q + 1, -1)])
                        })
                        .collect();
                    Ok(NestedSum {
                        vars: &vars,
                        n_upper,
                        depth: md,
                        strict: false,
                        powers: dual.parts().to_vec(),
                        binom_at: None,
                        plain: Vec::new(),
                        shifted,
                        shifted_minus_one: Some((m - 1, md)),
                    }
                    .build())
                }
            }
        }
        "antipode.poly" => {
            let k = need_index()?;
            let m = k.depth();
            let vars = VarSet::t_vars(m, None);
            let strict_head = |j: usize| {
                NestedSum {
                    vars: &vars,
                    n_upper,
                    depth: j,
                    strict: true,
                    powers: k.parts()[..j].to_vec(),
                    binom_at: None,
                    plain: (0..j).map(|v| (v, vec![(v + 1, 1)])).collect(),
                    shifted: Vec::new(),
                    shifted_minus_one: None,
                }
                .build()
            };
            let star_tail = |j: usize| {
                // variables t_m, t_{m-1}, ..., t_{j+1} paired with
                // n_1, ..., n_{m-j}; powers k_m, ..., k_{j+1}
                let d = m - j;
                let powers: Vec<u32> = (0..d).map(|i| k.parts()[m - 1 - i]).collect();
                NestedSum {
                    vars: &vars,
                    n_upper,
                    depth: d,
                    strict: false,
                    powers,
                    binom_at: None,
                    plain: (0..d).map(|i| (m - 1 - i, vec![(i + 1, 1)])).collect(),
                    shifted: Vec::new(),
                    shifted_minus_one: None,
                }
                .build()
            };
            Ok(match side {
                Side::Left => {
                    let full = strict_head(m);
                    if (m - 1) % 2 == 1 {
                        full.neg()
                    } else {
                        full
                    }
                }
                Side::Right => {
                    let mut acc = star_tail(0);
                    for j in 1..m {
                        let prod = strict_head(j).mul(&star_tail(j));
                        acc = if j % 2 == 1 {
                            acc.sub(&prod)
                        } else {
                            acc.add(&prod)
                        };
                    }
                    acc
                }
            })
        }
        _ => Err(PolyIdError::UnknownIdentity(id.into())),
    }
}

/// Builds both sides and compares exactly.
pub fn verify(
    id: &str,
    n_upper: u32,
    index: Option<&Index>,
    subset: Option<&[usize]>,
    extra: Option<u32>,
) -> Result<bool, PolyIdError> {
    let lhs = build_side(id, Side::Left, n_upper, index, subset, extra)?;
    let rhs = build_side(id, Side::Right, n_upper, index, subset, extra)?;
    Ok(lhs == rhs)
}

/// One suite row: what was checked and whether the two sides agreed.
#[derive(Debug, Clone)]
pub struct PolyCheck {
    pub id: String,
    pub params: String,
    pub pass: bool,
    pub lhs_digest: String,
    pub rhs_digest: String,
    pub terms: usize,
}

fn run_one(
    id: &str,
    n_upper: u32,
    index: Option<&Index>,
    subset: Option<&[usize]>,
    extra: Option<u32>,
) -> PolyCheck {
    let lhs =
        build_side(id, Side::Left, n_upper, index, subset, extra).expect("grid within guards");
    let rhs =
        build_side(id, Side::Right, n_upper, index, subset, extra).expect("grid within guards");
    let mut params = format!("N={n_upper}");
    if let Some(k) = index {
        params.push_str(&format!(",kk={k}"));
    }
    if let Some(s) = subset {
        params.push_str(&format!(
            ",S={}",
            s.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("+")
        ));
    }
    if let Some(e) = extra {
        params.push_str(&format!(",n={e}"));
    }
    PolyCheck {
        id: id.to_string(),
        params,
        pass: lhs == rhs,
        terms: lhs.num_terms().max(rhs.num_terms()),
        lhs_digest: lhs.digest(),
        rhs_digest: rhs.digest(),
    }
}

fn subsets_of(upper: usize) -> Vec<Vec<usize>> {
    // all subsets of {1, ..., upper}
    let mut out = Vec::new();
    for mask in 0..(1u32 << upper) {
        out.push((1..=upper).filter(|i| mask >> (i - 1) & 1 == 1).collect());
    }
    out
}

/// Runs the whole symbolic suite: every identity for all indices of weight
/// <= `max_weight` and N in `1..=max_n` (operator lemmas over matching scalar
/// grids), including every subset choice of the grouped identity.
pub fn run_suite(max_weight: u32, max_n: u32) -> Vec<PolyCheck> {
    let mut out = Vec::new();
    for n_upper in 1..=max_n {
        out.push(run_one("euler", n_upper, None, None, None));
        out.push(run_one("seed.alt", n_upper, None, None, None));
        out.push(run_one("seed.plain", n_upper, None, None, None));
        for n in 1..=max_n {
            out.push(run_one("intop.power", n_upper, None, None, Some(n)));
            out.push(run_one("intop.shifted", n_upper, None, None, Some(n)));
            out.push(run_one("jstar.power", n_upper, None, None, Some(n)));
            out.push(run_one("jstar.shifted", n_upper, None, None, Some(n)));
            out.push(run_one("jn.power", n_upper, None, None, Some(n)));
            // the shifted J^N identity needs n <= N: the telescoping step
            // behind it splits sum_{j=k+1}^{N} at j = k, which requires
            // k <= N, and every weight-induction use has n <= N
            if n <= n_upper {
                out.push(run_one("jn.shifted", n_upper, None, None, Some(n)));
            }
            for j in 0..=n {
                out.push(run_one(
                    "binom.double",
                    n_upper,
                    None,
                    None,
                    Some(n * 100 + j),
                ));
            }
        }
        for w in 1..=max_weight {
            for k in crate::index::indices_of_weight(w) {
                out.push(run_one("dualsum.star.alt", n_upper, Some(&k), None, None));
                out.push(run_one("dualsum.star.plain", n_upper, Some(&k), None, None));
                out.push(run_one("dualsum.strict.alt", n_upper, Some(&k), None, None));
                out.push(run_one(
                    "dualsum.strict.plain",
                    n_upper,
                    Some(&k),
                    None,
                    None,
                ));
                out.push(run_one("dualsum.onevar", n_upper, Some(&k), None, None));
                out.push(run_one("antipode.poly", n_upper, Some(&k), None, None));
                for s in subsets_of(k.depth() - 1) {
                    out.push(run_one("dualsum.subst", n_upper, Some(&k), Some(&s), None));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn euler_n3_value() {
        let lhs = build_side("euler", Side::Left, 3, None, None, None).unwrap();
        let rhs = build_side("euler", Side::Right, 3, None, None, None).unwrap();
        assert_eq!(lhs.constant_term(), rat(11, 6));
        assert_eq!(lhs, rhs);
        // N=1: both sides are 1
        let l1 = build_side("euler", Side::Left, 1, None, None, None).unwrap();
        assert_eq!(l1.constant_term(), rat_int(1));
    }

    #[test]
    fn double_binomial_spot() {
        // n=3, j=1: 3t(1+t)^2
        let rhs = build_side("binom.double", Side::Right, 1, None, None, Some(301)).unwrap();
        let vars = VarSet::new(&["t"]);
        let t = MultiPoly::var(&vars, 0);
        let expected = t
            .mul(&MultiPoly::one(&vars).add(&t).pow(2))
            .scale(&rat_int(3));
        assert_eq!(rhs, expected);
        assert!(verify("binom.double", 1, None, None, Some(301)).unwrap());
    }

    #[test]
    fn star_identities_small() {
        for (parts, n) in [
            (vec![1u32], 4u32),
            (vec![2], 3),
            (vec![1, 1], 3),
            (vec![2, 1], 4),
            (vec![1, 2], 2),
        ] {
            let k = Index::new(parts);
            assert!(
                verify("dualsum.star.alt", n, Some(&k), None, None).unwrap(),
                "star.alt failed at kk={k} N={n}"
            );
            assert!(
                verify("dualsum.star.plain", n, Some(&k), None, None).unwrap(),
                "star.plain failed at kk={k} N={n}"
            );
        }
    }

    #[test]
    fn strict_identities_small() {
        for (parts, n) in [
            (vec![1u32], 4u32),
            (vec![2], 3),
            (vec![1, 1], 3),
            (vec![2, 1], 3),
            (vec![1, 1, 1], 2),
        ] {
            let k = Index::new(parts);
            assert!(
                verify("dualsum.strict.alt", n, Some(&k), None, None).unwrap(),
                "strict.alt failed at kk={k} N={n}"
            );
            assert!(
                verify("dualsum.strict.plain", n, Some(&k), None, None).unwrap(),
                "strict.plain failed at kk={k} N={n}"
            );
        }
    }

    #[test]
    fn antipode_and_onevar_small() {
        for (parts, n) in [
            (vec![1u32, 1], 3u32),
            (vec![2, 1], 3),
            (vec![1, 2, 1], 2),
            (vec![3], 4),
        ] {
            let k = Index::new(parts);
            assert!(
                verify("antipode.poly", n, Some(&k), None, None).unwrap(),
                "antipode failed at kk={k} N={n}"
            );
            assert!(
                verify("dualsum.onevar", n, Some(&k), None, None).unwrap(),
                "onevar failed at kk={k} N={n}"
            );
        }
    }

    #[test]
    fn subst_all_subsets_small() {
        for (parts, n) in [(vec![1u32, 1], 3u32), (vec![2, 1], 3), (vec![1, 1, 1], 2)] {
            let k = Index::new(parts);
            for s in subsets_of(k.depth() - 1) {
                assert!(
                    verify("dualsum.subst", n, Some(&k), Some(&s), None).unwrap(),
                    "subst failed at kk={k} N={n} S={s:?}"
                );
            }
        }
    }

    #[test]
    fn subst_agrees_with_post_substitution() {
        // substituting 1 into the fully expanded right side agrees with the
        // regrouped sum built fresh (the 0^0 = 1 convention, structurally)
        let k = Index::new(vec![2, 1]);
        let n = 3;
        let full_rhs =
            build_side("dualsum.star.alt", Side::Right, n, Some(&k), None, None).unwrap();
        for s in subsets_of(k.depth() - 1) {
            let mut post = full_rhs.clone();
            for &i in &s {
                post = post.subst_value(i - 1, &rat_int(1));
            }
            let fresh =
                build_side("dualsum.subst", Side::Right, n, Some(&k), Some(&s), None).unwrap();
            assert_eq!(post, fresh, "subset {s:?}");
        }
    }

    #[test]
    fn guard_boundary_weight5_n6() {
        // the largest admissible instances: weight-5 indices at N = 6
        for parts in [
            vec![5u32],
            vec![2, 3],
            vec![1, 1, 1, 1, 1],
            vec![2, 1, 1, 1],
        ] {
            let k = Index::new(parts);
            for id in [
                "dualsum.star.alt",
                "dualsum.star.plain",
                "dualsum.strict.alt",
                "dualsum.strict.plain",
                "dualsum.onevar",
                "antipode.poly",
            ] {
                assert!(
                    verify(id, 6, Some(&k), None, None).unwrap(),
                    "{id} failed at kk={k} N=6"
                );
            }
            let full: Vec<usize> = (1..k.depth()).collect();
            assert!(verify("dualsum.subst", 6, Some(&k), Some(&full), None).unwrap());
        }
    }

    #[test]
    fn guards_rejected() {
        assert!(matches!(
            verify("euler", 9, None, None, None),
            Err(PolyIdError::Guard(_))
        ));
        let heavy = Index::new(vec![6]);
        assert!(matches!(
            verify("dualsum.star.alt", 2, Some(&heavy), None, None),
            Err(PolyIdError::Guard(_))
        ));
        assert!(matches!(
            verify("nope", 2, None, None, None),
            Err(PolyIdError::UnknownIdentity(_))
        ));
    }
}
