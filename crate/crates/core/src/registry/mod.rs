//! The machine-readable catalog of congruences and functional equations:
//! each entry names its parameters, its prime guard, the modulus exponent,
//! and paired left/right evaluators. `evaluate` turns one (entry, params,
//! prime) cell into check records with exact residues on both sides.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num::One;

use crate::exact::{rat, rat_int, Rational};
use crate::index::Index;
use crate::modular::{ModError, ModResult, ResidueValue};

mod alt;
mod funceq;
mod genbern;
mod mv;
mod ones;
mod oy;
mod special;
mod zeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    ClosedForm,
    FunctionalEq,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryKind::ClosedForm => write!(f, "closed-form"),
            EntryKind::FunctionalEq => write!(f, "functional-eq"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamValue {
    Int(i64),
    Index(Index),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Index(k) => {
                let parts: Vec<String> = k.parts().iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("."))
            }
        }
    }
}

/// Named parameter assignment for one registry cell.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn with_int(mut self, name: &str, v: i64) -> Self {
        self.0.insert(name.to_string(), ParamValue::Int(v));
        self
    }

    pub fn with_index(mut self, name: &str, k: Index) -> Self {
        self.0.insert(name.to_string(), ParamValue::Index(k));
        self
    }

    pub fn int(&self, name: &str) -> i64 {
        match self.0.get(name) {
            Some(ParamValue::Int(v)) => *v,
            _ => panic!("missing integer parameter `{name}`"),
        }
    }

    pub fn index(&self, name: &str) -> &Index {
        match self.0.get(name) {
            Some(ParamValue::Index(k)) => k,
            _ => panic!("missing index parameter `{name}`"),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `k1=2,k2=1,kk=2.1.1` (dots separate index entries).
impl FromStr for Params {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Params::new();
        if s.trim().is_empty() {
            return Ok(out);
        }
        for piece in s.split(',') {
            let (name, value) = piece
                .split_once('=')
                .ok_or_else(|| format!("bad parameter `{piece}` (want name=value)"))?;
            let name = name.trim();
            let value = value.trim();
            if value.contains('.') {
                let parts: Result<Vec<u32>, _> =
                    value.split('.').map(|x| x.trim().parse::<u32>()).collect();
                let parts = parts.map_err(|_| format!("bad index value `{value}`"))?;
                out = out.with_index(name, Index::new(parts));
            } else if let Ok(v) = value.parse::<i64>() {
                out = out.with_int(name, v);
            } else {
                return Err(format!("bad parameter value `{value}`"));
            }
        }
        Ok(out)
    }
}

pub type Pair = (ResidueValue, ResidueValue);
pub type SubChecks = Vec<(String, Pair)>;
pub type EvalFn = Box<dyn Fn(&Params, &[Rational], u64) -> ModResult<SubChecks> + Send + Sync>;
pub type GuardFn = Box<dyn Fn(&Params) -> u64 + Send + Sync>;
pub type AdmitFn = Box<dyn Fn(&Params, u64) -> bool + Send + Sync>;
pub type ArgsFn = Box<dyn Fn(&Params, u64) -> Vec<Vec<Rational>> + Send + Sync>;

/// One registry entry: a congruence or functional equation with its guard,
/// modulus exponent, default parameter grid, and paired evaluators.
pub struct IdentityEntry {
    pub id: &'static str,
    pub kind: EntryKind,
    pub mod_exponent: u8,
    pub statement: String,
    pub guard_text: String,
    /// sweep cost cap: the runner does not take this entry past this prime
    pub prime_cap: Option<u64>,
    pub grid: Vec<Params>,
    guard: GuardFn,
    admissible: Option<AdmitFn>,
    arguments: Option<ArgsFn>,
    eval: EvalFn,
}

impl IdentityEntry {
    /// The minimum admissible prime is the smallest prime strictly above
    /// this bound.
    pub fn guard_bound(&self, params: &Params) -> u64 {
        (self.guard)(params)
    }

    pub fn admits(&self, params: &Params, p: u64) -> bool {
        p > self.guard_bound(params) && self.admissible.as_ref().map_or(true, |f| f(params, p))
    }

    /// Argument tuples sampled for this (params, prime) cell; closed forms
    /// get the single empty tuple.
    pub fn argument_tuples(&self, params: &Params, p: u64) -> Vec<Vec<Rational>> {
        match &self.arguments {
            None => vec![Vec::new()],
            Some(f) => f(params, p),
        }
    }

    pub fn run(&self, params: &Params, args: &[Rational], p: u64) -> ModResult<SubChecks> {
        (self.eval)(params, args, p)
    }
}

/// One verification outcome; `pass` iff the two residues agree.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: String,
    pub p: u64,
    pub n: u8,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Evaluates one (entry, params, prime) cell. Errors if the prime violates
/// the guard; evaluator-level unit failures propagate as errors.
pub fn evaluate(entry: &IdentityEntry, params: &Params, p: u64) -> ModResult<Vec<CheckRecord>> {
    evaluate_with_offset(entry, params, p, 0)
}

/// Same as [`evaluate`] but adds `offset` to every right-hand side; the
/// mutation sentinel uses offset 1 to prove the evaluators can fail.
pub fn evaluate_with_offset(
    entry: &IdentityEntry,
    params: &Params,
    p: u64,
    offset: u64,
) -> ModResult<Vec<CheckRecord>> {
    if !entry.admits(params, p) {
        return Err(ModError::Guard {
            requirement: format!(
                "entry {} with {} requires {} (and side conditions); got p={p}",
                entry.id, params, entry.guard_text
            ),
        });
    }
    let mut out = Vec::new();
    for tuple in entry.argument_tuples(params, p) {
        let checks = (entry.eval)(params, &tuple, p)?;
        let multi = checks.len() > 1;
        for (label, (lhs, rhs)) in checks {
            let rhs = if offset == 0 {
                rhs
            } else {
                rhs + ResidueValue::new(offset as i128, rhs.prime(), rhs.exponent())
            };
            let mut params_str = params.to_string();
            if !tuple.is_empty() {
                let args: Vec<String> = tuple.iter().map(|t| t.to_string()).collect();
                if !params_str.is_empty() {
                    params_str.push(',');
                }
                params_str.push_str(&format!("t=({})", args.join(";")));
            }
            if multi {
                if !params_str.is_empty() {
                    params_str.push(',');
                }
                params_str.push_str(&format!("eq={label}"));
            }
            out.push(CheckRecord {
                id: entry.id.to_string(),
                params: params_str,
                p,
                n: entry.mod_exponent,
                lhs: lhs.value().to_string(),
                rhs: rhs.value().to_string(),
                pass: lhs == rhs,
            });
        }
    }
    Ok(out)
}

/// The full registry, built once.
pub fn catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::new();
        out.extend(zeta::entries());
        out.extend(funceq::entries());
        out.extend(ones::entries());
        out.extend(special::entries());
        out.extend(alt::entries());
        out.extend(mv::entries());
        out.extend(oy::entries());
        out.extend(genbern::entries());
        let mut seen = std::collections::BTreeSet::new();
        for e in &out {
            assert!(seen.insert(e.id), "duplicate registry id {}", e.id);
            assert!(
                (1..=4).contains(&e.mod_exponent),
                "bad exponent on {}",
                e.id
            );
        }
        out
    })
}

pub fn find(id: &str) -> Option<&'static IdentityEntry> {
    catalog().iter().find(|e| e.id == id)
}

/// The deterministic argument sample set for functional equations.
pub fn default_samples() -> Vec<Rational> {
    vec![
        rat_int(-1),
        rat_int(2),
        rat(1, 2),
        rat_int(3),
        rat(-1, 3),
        rat(5, 2),
    ]
}

/// Keeps only p-unit samples (numerator and denominator coprime to p).
pub fn unit_samples(p: u64) -> Vec<Rational> {
    default_samples()
        .into_iter()
        .filter(|t| crate::eval::is_p_unit(t, p))
        .collect()
}

/// Cartesian power of the unit sample set, for depth-m argument tuples.
pub fn sample_tuples(m: usize, p: u64) -> Vec<Vec<Rational>> {
    let base = unit_samples(p);
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(out.len() * base.len());
        for tuple in &out {
            for t in &base {
                let mut tt = tuple.clone();
                tt.push(t.clone());
                next.push(tt);
            }
        }
        out = next;
    }
    out
}

// ---- shared construction helpers for the entry files ----

pub(crate) struct Builder {
    id: &'static str,
    kind: EntryKind,
    n: u8,
    statement: String,
    guard_text: String,
    prime_cap: Option<u64>,
    grid: Vec<Params>,
    guard: Option<GuardFn>,
    admissible: Option<AdmitFn>,
    arguments: Option<ArgsFn>,
}

impl Builder {
    pub fn closed(id: &'static str, n: u8, statement: impl Into<String>) -> Self {
        Builder {
            id,
            kind: EntryKind::ClosedForm,
            n,
            statement: statement.into(),
            guard_text: String::new(),
            prime_cap: None,
            grid: Vec::new(),
            guard: None,
            admissible: None,
            arguments: None,
        }
    }

    pub fn functional(id: &'static str, n: u8, statement: impl Into<String>) -> Self {
        Builder {
            kind: EntryKind::FunctionalEq,
            ..Builder::closed(id, n, statement)
        }
    }

    pub fn guard_text(mut self, s: impl Into<String>) -> Self {
        self.guard_text = s.into();
        self
    }

    pub fn cap(mut self, p: u64) -> Self {
        self.prime_cap = Some(p);
        self
    }

    pub fn grid(mut self, grid: Vec<Params>) -> Self {
        self.grid = grid;
        self
    }

    pub fn guard(mut self, f: impl Fn(&Params) -> u64 + Send + Sync + 'static) -> Self {
        self.guard = Some(Box::new(f));
        self
    }

    pub fn admissible(mut self, f: impl Fn(&Params, u64) -> bool + Send + Sync + 'static) -> Self {
        self.admissible = Some(Box::new(f));
        self
    }

    pub fn arguments(
        mut self,
        f: impl Fn(&Params, u64) -> Vec<Vec<Rational>> + Send + Sync + 'static,
    ) -> Self {
        self.arguments = Some(Box::new(f));
        self
    }

    pub fn eval(
        self,
        f: impl Fn(&Params, &[Rational], u64) -> ModResult<SubChecks> + Send + Sync + 'static,
    ) -> IdentityEntry {
        IdentityEntry {
            id: self.id,
            kind: self.kind,
            mod_exponent: self.n,
            statement: self.statement,
            guard_text: if self.guard_text.is_empty() {
                "p >= 2".to_string()
            } else {
                self.guard_text
            },
            prime_cap: self.prime_cap,
            grid: self.grid,
            guard: self.guard.unwrap_or_else(|| Box::new(|_| 1)),
            admissible: self.admissible,
            arguments: self.arguments,
            eval: Box::new(f),
        }
    }
}

/// Reduce an exact rational mod p^n.
pub(crate) fn rr(x: &Rational, p: u64, n: u8) -> ModResult<ResidueValue> {
    crate::modular::reduce_rational(x, p, n)
}

/// Bernoulli number as a rational, by nonnegative index.
pub(crate) fn bb(m: i64) -> Rational {
    assert!(m >= 0, "negative Bernoulli index");
    crate::exact::bernoulli(m as usize)
}

/// B_m / m as a rational.
pub(crate) fn bh(m: i64) -> Rational {
    assert!(m >= 1, "bad Bernoulli-hat index {m}");
    crate::exact::bernoulli_hat(m as usize)
}

pub(crate) fn pint(p: u64) -> Rational {
    rat_int(p as i64)
}

pub(crate) fn binc(n: i64, k: i64) -> Rational {
    assert!(n >= 0);
    crate::exact::binomial_rat(n as u64, k)
}

/// 2^e as an exact rational (e may be negative).
pub(crate) fn pow2(e: i64) -> Rational {
    if e >= 0 {
        rat_int(2).pow(e as i32)
    } else {
        Rational::one() / rat_int(2).pow((-e) as i32)
    }
}

/// The Fermat quotient of 2 as a residue mod p^n.
pub(crate) fn q2(p: u64, n: u8) -> ModResult<ResidueValue> {
    crate::modular::fermat_quotient(&rat_int(2), p, n)
}

/// Single unlabeled sub-check.
pub(crate) fn one_pair(lhs: ResidueValue, rhs: ResidueValue) -> SubChecks {
    vec![(String::new(), (lhs, rhs))]
}

pub(crate) fn label(s: &str, lhs: ResidueValue, rhs: ResidueValue) -> (String, Pair) {
    (s.to_string(), (lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert!(cat.len() >= 90, "catalog has only {} entries", cat.len());
        for e in cat {
            assert!(!e.grid.is_empty(), "{} has an empty default grid", e.id);
            for params in &e.grid {
                assert!(e.guard_bound(params) >= 1, "{} guard below 2", e.id);
            }
        }
    }

    #[test]
    fn params_roundtrip() {
        let p: Params = "k1=2,k2=-1,kk=2.1.1".parse().unwrap();
        assert_eq!(p.int("k1"), 2);
        assert_eq!(p.int("k2"), -1);
        assert_eq!(p.index("kk"), &Index::new(vec![2, 1, 1]));
        assert_eq!(p.to_string(), "k1=2,k2=-1,kk=2.1.1");
        assert!("k1".parse::<Params>().is_err());
        assert!("kk=2.x".parse::<Params>().is_err());
    }

    #[test]
    fn guard_violation_is_error() {
        let entry = find("fmzv.repeat.star").unwrap();
        let params = Params::new().with_int("k", 2).with_int("m", 3);
        // guard is p > mk+2 = 8
        assert!(matches!(
            evaluate(entry, &params, 7),
            Err(ModError::Guard { .. })
        ));
        assert!(evaluate(entry, &params, 11).is_ok());
    }

    #[test]
    fn worked_examples() {
        // repeated-index star form at (k=1, m=2), p=7, mod p^2
        let entry = find("fmzv.repeat.star").unwrap();
        let params = Params::new().with_int("k", 1).with_int("m", 2);
        let recs = evaluate(entry, &params, 7).unwrap();
        assert!(recs.iter().all(|r| r.pass));
        // star duality at kk=(2), p=11: zeta*(2) = -zeta*(1,1) mod 11
        let entry = find("fmzv.duality").unwrap();
        let params = Params::new().with_index("kk", Index::single(2));
        let recs = evaluate(entry, &params, 11).unwrap();
        assert!(recs.iter().all(|r| r.pass));
    }

    /// The scalar antipode relation with kk = (k1, {1}^(k2-1)) collapses to
    /// the hook relation: with every zeta*({1}^j) vanishing mod p, the sum
    /// reduces to zeta(k1,{1}^(k2-1)) + (-1)^k2 zeta*({1}^(k2-1),k1) = 0,
    /// which combined with reversal is exactly the `fmzv.hook` statement.
    #[test]
    fn antipode_chain_reproduces_hook_relation() {
        use crate::eval::mhs;
        for p in crate::modular::primes_in(5, 31) {
            for k1 in 1..=3u32 {
                for k2 in 2..=4u32 {
                    if p <= (k1 + k2) as u64 {
                        continue;
                    }
                    let mut parts = vec![k1];
                    parts.extend(vec![1; (k2 - 1) as usize]);
                    let kk = Index::new(parts);
                    // middle terms vanish
                    for j in 1..(k2 as usize) {
                        assert!(mhs(&Index::repeat(1, j), p, 1, true).is_zero());
                    }
                    // the collapsed two-term relation
                    let lhs = mhs(&kk, p, 1, false);
                    let mut rev_star_parts = vec![1; (k2 - 1) as usize];
                    rev_star_parts.push(k1);
                    let rev_star = mhs(&Index::new(rev_star_parts), p, 1, true);
                    let collapsed = if k2 % 2 == 0 {
                        lhs + rev_star
                    } else {
                        lhs - rev_star
                    };
                    assert!(collapsed.is_zero(), "p={p} k1={k1} k2={k2}");
                    // reversal turns it into the hook relation
                    let hook_star = mhs(&kk, p, 1, true);
                    let expect = if k1 % 2 == 0 { lhs } else { -lhs };
                    assert_eq!(hook_star, expect, "p={p} k1={k1} k2={k2}");
                }
            }
        }
    }

    /// every entry passes over a quick low-prime sweep of its whole grid
    #[test]
    fn quick_sweep_all_entries() {
        let mut failures = Vec::new();
        for entry in catalog() {
            for params in &entry.grid {
                let lo = entry.guard_bound(params);
                let cap = entry.prime_cap.unwrap_or(u64::MAX).min(61);
                let mut tested = 0;
                for p in crate::modular::primes_in(lo + 1, cap) {
                    if !entry.admits(params, p) {
                        continue;
                    }
                    if tested >= 3 {
                        break;
                    }
                    tested += 1;
                    match evaluate(entry, params, p) {
                        Ok(records) => {
                            for r in records {
                                if !r.pass {
                                    failures.push(format!(
                                        "{} [{}] p={} lhs={} rhs={}",
                                        r.id, r.params, r.p, r.lhs, r.rhs
                                    ));
                                }
                            }
                        }
                        Err(e) => {
                            failures.push(format!("{} [{}] p={} error: {e}", entry.id, params, p))
                        }
                    }
                }
            }
        }
        assert!(
            failures.is_empty(),
            "{} failing cells, first 25:\n{}",
            failures.len(),
            failures
                .iter()
                .take(25)
                .cloned()
                .collect::<Vec<_>>()
                .join("\n")
        );
    }
}
