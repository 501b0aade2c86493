//! Exact sparse multivariate polynomial arithmetic over the rationals, with
//! opt-in Laurent (negative-exponent) variables, plus the truncated integral
//! operators used by the symbolic identity suite.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::exact::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("negative exponent on non-Laurent variable `{0}`")]
    LaurentViolation(String),
    #[error("operator requires zero constant term in `{0}`")]
    NonzeroConstantTerm(String),
    #[error("operand variable sets differ")]
    VarSetMismatch,
}

/// An ordered set of variable names with per-variable Laurent flags.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    laurent: Vec<bool>,
}

impl VarSet {
    pub fn new(names: &[&str]) -> Arc<Self> {
        Arc::new(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
            laurent: vec![false; names.len()],
        })
    }

    pub fn with_laurent(names: &[&str], laurent: &[bool]) -> Arc<Self> {
        assert_eq!(names.len(), laurent.len());
        Arc::new(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
            laurent: laurent.to_vec(),
        })
    }

    /// t_1, ..., t_m; entries listed in `laurent_from` onward allow negative
    /// exponents.
    pub fn t_vars(m: usize, laurent_from: Option<usize>) -> Arc<Self> {
        let names: Vec<String> = (1..=m).map(|i| format!("t{i}")).collect();
        let laurent = (0..m)
            .map(|i| laurent_from.is_some_and(|l| i >= l))
            .collect();
        Arc::new(VarSet { names, laurent })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }
}

/// Sparse multivariate polynomial: exponent vectors mapped to nonzero
/// rational coefficients. Terms are kept canonical (sorted keys, no zeros),
/// so equality is plain representation equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The monomial c * prod x_i^{e_i}. Errors if a negative exponent lands
    /// on a non-Laurent variable.
    pub fn monomial(vars: &Arc<VarSet>, exps: &[i32], c: Rational) -> Result<Self, PolyError> {
        assert_eq!(exps.len(), vars.len());
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !vars.is_laurent(i) {
                return Err(PolyError::LaurentViolation(vars.name(i).to_string()));
            }
        }
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        Ok(p)
    }

    /// The bare variable x_i.
    pub fn var(vars: &Arc<VarSet>, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, &exps, Rational::one()).expect("exponent 1 is valid")
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.vars.len()] as &Vec<i32>)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn check_vars(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &rhs.vars) || self.vars == rhs.vars,
            "operand variable sets differ"
        );
    }

    fn insert_term(&mut self, exps: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes a rational value for variable `i`. Negative exponents
    /// invert the value (which must be nonzero for that).
    pub fn subst_value(&self, i: usize, value: &Rational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            let factor = if k >= 0 {
                num::pow::pow(value.clone(), k as usize)
            } else {
                assert!(!value.is_zero(), "cannot invert zero substitution");
                num::pow::pow(value.clone(), (-k) as usize).recip()
            };
            let mut e2 = e.clone();
            e2[i] = 0;
            out.insert_term(e2, c * factor);
        }
        out
    }

    /// Substitutes a polynomial for variable `i`; every exponent of that
    /// variable must be nonnegative.
    pub fn subst_poly(&self, i: usize, value: &Self) -> Result<Self, PolyError> {
        self.check_vars(value);
        let mut out = Self::zero(&self.vars);
        // group by exponent to reuse powers
        let mut powers: Vec<Self> = vec![Self::one(&self.vars)];
        for (e, c) in &self.terms {
            let k = e[i];
            if k < 0 {
                return Err(PolyError::LaurentViolation(self.vars.name(i).to_string()));
            }
            while powers.len() <= k as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[i] = 0;
            let base = Self::monomial(&self.vars, &e2, c.clone()).expect("validated exponents");
            out = out.add(&base.mul(&powers[k as usize]));
        }
        Ok(out)
    }

    /// Monomial map t^n -> t^n/n on the designated variable; the formal
    /// integral of f(t)/t. Errors on terms constant in `t`.
    pub fn op_i(&self, t: usize) -> Result<Self, PolyError> {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let n = e[t];
            if n == 0 {
                return Err(PolyError::NonzeroConstantTerm(
                    self.vars.name(t).to_string(),
                ));
            }
            out.insert_term(e.clone(), c / rat_int(n as i64));
        }
        Ok(out)
    }

    /// Monomial map t^a s^b -> sum_{j=1}^{a} t^{a-j} s^{b+j} / j
    /// (pure-s monomials map to zero).
    pub fn op_j_star(&self, t: usize, s: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let a = e[t];
            debug_assert!(a >= 0 && e[s] >= 0);
            for j in 1..=a {
                let mut e2 = e.clone();
                e2[t] = a - j;
                e2[s] += j;
                out.insert_term(e2, c / rat_int(j as i64));
            }
        }
        out
    }

    /// Monomial map t^a s^b -> sum_{j=a+1}^{N-b} t^{a-j} s^{b+j} / j (empty
    /// when a+1 > N-b). The output carries negative powers of `t`, so `t`
    /// must be declared Laurent.
    pub fn op_j_n(&self, t: usize, s: usize, big_n: u32) -> Result<Self, PolyError> {
        if !self.vars.is_laurent(t) {
            return Err(PolyError::LaurentViolation(self.vars.name(t).to_string()));
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let a = e[t];
            let b = e[s];
            debug_assert!(a >= 0 && b >= 0);
            for j in a + 1..=(big_n as i32 - b) {
                let mut e2 = e.clone();
                e2[t] = a - j;
                e2[s] = b + j;
                out.insert_term(e2, c / rat_int(j as i64));
            }
        }
        Ok(out)
    }

    /// A short stable digest of the canonical form, for reports.
    pub fn digest(&self) -> String {
        if self.terms.len() <= 3 {
            return self.to_string();
        }
        // FNV-1a over the canonical rendering; stable across runs and platforms.
        let mut h: u64 = 0xcbf29ce484222325;
        for b in self.to_string().bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("terms={};fnv={:016x}", self.terms.len(), h)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac = c.abs();
            let unit_coeff = ac.is_one();
            let monomial_present = e.iter().any(|&x| x != 0);
            if !unit_coeff || !monomial_present {
                write!(f, "{ac}")?;
            }
            let mut sep = !unit_coeff || !monomial_present;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if sep {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars.name(i))?;
                if x != 1 {
                    write!(f, "^{x}")?;
                }
                sep = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn tvars() -> Arc<VarSet> {
        VarSet::new(&["t"])
    }

    fn one_minus_t(vars: &Arc<VarSet>, t: usize) -> MultiPoly {
        MultiPoly::one(vars).sub(&MultiPoly::var(vars, t))
    }

    #[test]
    fn ring_examples() {
        let vars = tvars();
        let t = MultiPoly::var(&vars, 0);
        let one = MultiPoly::one(&vars);
        // (t+1)(t-1) = t^2 - 1
        let prod = t.add(&one).mul(&t.sub(&one));
        let expected = t.pow(2).sub(&one);
        assert_eq!(prod, expected);
    }

    #[test]
    fn subst_examples() {
        let vars = tvars();
        let one = MultiPoly::one(&vars);
        let t = MultiPoly::var(&vars, 0);
        // subst t := 1-t into (1-t)^3 - 1 gives t^3 - 1
        let f = one_minus_t(&vars, 0).pow(3).sub(&one);
        let g = f.subst_poly(0, &one.sub(&t)).unwrap();
        assert_eq!(g, t.pow(3).sub(&one));
        // value substitution
        let h = f.subst_value(0, &rat_int(1));
        assert_eq!(h, MultiPoly::constant(&vars, rat_int(-1)));
    }

    #[test]
    fn equality_is_insertion_order_independent() {
        let vars = VarSet::new(&["x", "y"]);
        let x = MultiPoly::var(&vars, 0);
        let y = MultiPoly::var(&vars, 1);
        let a = x.add(&y).add(&x.mul(&y));
        let b = x.mul(&y).add(&x).add(&y);
        assert_eq!(a, b);
    }

    #[test]
    fn laurent_violation_detected() {
        let vars = tvars();
        assert_eq!(
            MultiPoly::monomial(&vars, &[-1], rat_int(1)),
            Err(PolyError::LaurentViolation("t".into()))
        );
        let lv = VarSet::with_laurent(&["t"], &[true]);
        assert!(MultiPoly::monomial(&lv, &[-1], rat_int(1)).is_ok());
    }

    #[test]
    fn op_i_examples() {
        let vars = tvars();
        let t = MultiPoly::var(&vars, 0);
        let one = MultiPoly::one(&vars);
        assert_eq!(t.pow(3).op_i(0).unwrap(), t.pow(3).scale(&rat(1, 3)));
        // (1-t)^2 - 1 -> ((1-t)-1) + ((1-t)^2-1)/2
        let f = one_minus_t(&vars, 0).pow(2).sub(&one);
        let expected = one_minus_t(&vars, 0)
            .sub(&one)
            .add(&one_minus_t(&vars, 0).pow(2).sub(&one).scale(&rat(1, 2)));
        assert_eq!(f.op_i(0).unwrap(), expected);
        assert!(MultiPoly::zero(&vars).op_i(0).unwrap().is_zero());
        assert!(one.op_i(0).is_err());
    }

    #[test]
    fn op_j_star_examples() {
        let vars = VarSet::new(&["t", "s"]);
        let t = MultiPoly::var(&vars, 0);
        let s = MultiPoly::var(&vars, 1);
        // t^2 -> t s + s^2/2
        assert_eq!(
            t.pow(2).op_j_star(0, 1),
            t.mul(&s).add(&s.pow(2).scale(&rat(1, 2)))
        );
        // pure-s monomials die
        assert!(s.pow(3).op_j_star(0, 1).is_zero());
        // (1-t)^2 - 1 -> sum_{j=1}^{2} (1-t)^{2-j} ((1-s)^j - 1)/j
        let one = MultiPoly::one(&vars);
        let f = one_minus_t(&vars, 0).pow(2).sub(&one);
        let mut expected = MultiPoly::zero(&vars);
        for j in 1..=2u32 {
            let term = one_minus_t(&vars, 0)
                .pow(2 - j)
                .mul(&one.sub(&s).pow(j).sub(&one))
                .scale(&rat(1, j as i64));
            expected = expected.add(&term);
        }
        assert_eq!(f.op_j_star(0, 1), expected);
    }

    #[test]
    fn op_j_n_examples() {
        let vars = VarSet::with_laurent(&["t", "s"], &[true, false]);
        let t = MultiPoly::var(&vars, 0);
        let s = MultiPoly::var(&vars, 1);
        let one = MultiPoly::one(&vars);
        // t^n with n < N: sum_{j=n+1}^{N} s^j t^{n-j}/j
        let got = t.pow(2).op_j_n(0, 1, 4).unwrap();
        let mut expected = MultiPoly::zero(&vars);
        for j in 3..=4i32 {
            expected =
                expected.add(&MultiPoly::monomial(&vars, &[2 - j, j], rat(1, j as i64)).unwrap());
        }
        assert_eq!(got, expected);
        // t^n with n >= N maps to 0
        assert!(t.pow(4).op_j_n(0, 1, 4).unwrap().is_zero());
        assert!(t.pow(5).op_j_n(0, 1, 4).unwrap().is_zero());
        // (1-t)^n - 1 for n = N = 2:
        // -sum_{j=1}^n (1-t)^{n-j}((1-s)^j-1)/j + (sum_{j=1}^N (s/t)^j/j)((1-t)^n-1)
        let n = 2u32;
        let big_n = 2u32;
        let f = one_minus_t(&vars, 0).pow(n).sub(&one);
        let got = f.op_j_n(0, 1, big_n).unwrap();
        let mut expected = MultiPoly::zero(&vars);
        for j in 1..=n {
            expected = expected.sub(
                &one_minus_t(&vars, 0)
                    .pow(n - j)
                    .mul(&one.sub(&s).pow(j).sub(&one))
                    .scale(&rat(1, j as i64)),
            );
        }
        let mut harmonic_sum = MultiPoly::zero(&vars);
        for j in 1..=big_n as i32 {
            harmonic_sum =
                harmonic_sum.add(&MultiPoly::monomial(&vars, &[-j, j], rat(1, j as i64)).unwrap());
        }
        expected = expected.add(&harmonic_sum.mul(&f));
        assert_eq!(got, expected);
        // refusing a non-Laurent t
        let plain = VarSet::new(&["t", "s"]);
        assert!(MultiPoly::var(&plain, 0).op_j_n(0, 1, 3).is_err());
    }

    #[test]
    fn op_j_star_series_route() {
        // independent route: J* on t^a s^b equals truncating the full series
        // sum_{j>=1} t^{a-j} s^{b+j} / j to nonnegative t powers
        let vars = VarSet::new(&["t", "s"]);
        for a in 0..=8i32 {
            for b in 0..=8i32 {
                let f = MultiPoly::monomial(&vars, &[a, b], rat_int(1)).unwrap();
                let got = f.op_j_star(0, 1);
                let mut expected = MultiPoly::zero(&vars);
                for j in 1..=a {
                    expected = expected.add(
                        &MultiPoly::monomial(&vars, &[a - j, b + j], rat(1, j as i64)).unwrap(),
                    );
                }
                assert_eq!(got, expected, "failed at a={a} b={b}");
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(
            xs in proptest::collection::vec((0i32..4, 0i32..4, -4i64..5), 1..6),
            ys in proptest::collection::vec((0i32..4, 0i32..4, -4i64..5), 1..6),
            zs in proptest::collection::vec((0i32..4, 0i32..4, -4i64..5), 1..6),
        ) {
            let vars = VarSet::new(&["x", "y"]);
            let build = |ts: &[(i32, i32, i64)]| {
                let mut p = MultiPoly::zero(&vars);
                for &(a, b, c) in ts {
                    p = p.add(&MultiPoly::monomial(&vars, &[a, b], rat_int(c)).unwrap());
                }
                p
            };
            let (f, g, h) = (build(&xs), build(&ys), build(&zs));
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.mul(&g.mul(&h)), f.mul(&g).mul(&h));
            prop_assert_eq!(f.sub(&f), MultiPoly::zero(&vars));
        }
    }
}
