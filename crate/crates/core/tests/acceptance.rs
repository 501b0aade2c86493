//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime. Every comparison is exact; there are no tolerances.

use std::time::Instant;

use fmzv::eval::{self, fast_nested_eval, fmp_one_var, oy_decompose, oy_li, End};
use fmzv::exact::{bernoulli, rat, rat_int};
use fmzv::index::{indices_of_weight, Index};
use fmzv::modular::{primes_in, reduce_rational};
use fmzv::registry;
use fmzv::runner::{run_suite, sweep_entry, SuiteConfig, SuiteLevel};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Criterion {
    name: &'static str,
    started: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            started: Instant::now(),
        }
    }

    fn finish(self, pass: bool, detail: String) {
        let line = format!(
            "criterion {}: {} ({detail}, {:.2}s)",
            self.name,
            if pass { "PASS" } else { "FAIL" },
            self.started.elapsed().as_secs_f64()
        );
        println!("{line}");
        assert!(pass, "{line}");
    }
}

fn sweep_all(ids: &[&str], pmax: u64) -> (usize, Vec<String>) {
    let mut total = 0;
    let mut failures = Vec::new();
    for id in ids {
        let entry = registry::find(id).unwrap_or_else(|| panic!("missing entry {id}"));
        for params in &entry.grid {
            match sweep_entry(entry, params, 2, pmax) {
                Ok(records) => {
                    for r in records {
                        total += 1;
                        if !r.pass {
                            failures.push(format!(
                                "{} [{}] p={} lhs={} rhs={}",
                                r.id, r.params, r.p, r.lhs, r.rhs
                            ));
                        }
                    }
                }
                Err(e) => failures.push(format!("{id} [{params}] error: {e}")),
            }
        }
    }
    (total, failures)
}

/// 1. The symbolic polynomial suite: every identity family over all indices
///    of weight <= 4 and N in 1..=5, exact equality, under 60 seconds.
#[test]
fn criterion_1_symbolic_suite() {
    let c = Criterion::new("1 (symbolic suite, weight <= 4, N <= 5)");
    let checks = fmzv::polyid::run_suite(4, 5);
    let failed: Vec<_> = checks.iter().filter(|x| !x.pass).collect();
    let max_terms = checks.iter().map(|x| x.terms).max().unwrap_or(0);
    let within_budget = c.started.elapsed().as_secs_f64() < 60.0;
    let pass = failed.is_empty() && within_budget;
    c.finish(
        pass,
        format!(
            "{} expansions, {} failed, largest side {max_terms} terms",
            checks.len(),
            failed.len()
        ),
    );
}

/// 2. The repeated-index star congruence for all mk <= 6 and every prime
///    mk+2 < p <= 199.
#[test]
fn criterion_2_repeat_star_sweep() {
    let c = Criterion::new("2 (zeta*({k}^m) mod p^2, mk <= 6, p <= 199)");
    let (total, failures) = sweep_all(&["fmzv.repeat.star"], 199);
    c.finish(
        failures.is_empty(),
        format!("{total} cells, {} failed", failures.len()),
    );
}

/// 3. The weighted star sum sum 1/(n1..nm 2^n1) = (2^(m+1)-1)/2^(m+1)
///    B(p-m-1)/(m+1) p mod p^2 for m in {2,4} and m+2 < p <= 499, through
///    the running-sum fast path, under 30 seconds.
#[test]
fn criterion_3_half_argument_star() {
    let c = Criterion::new("3 (L*({1}^m;1/2) mod p^2, m in {2,4}, p <= 499)");
    let mut cells = 0;
    let mut failures = 0;
    for m in [2i64, 4] {
        for p in primes_in(m as u64 + 3, 499) {
            let idx = Index::repeat(1, m as usize);
            let lhs = fast_nested_eval(&idx, &rat(1, 2), p, 2, true, End::Head).unwrap();
            let rhs_rat = (rat_int(2).pow((m + 1) as i32) - rat_int(1))
                / rat_int(2).pow((m + 1) as i32)
                * bernoulli((p as i64 - m - 1) as usize)
                / rat_int(m + 1)
                * rat_int(p as i64);
            let rhs = reduce_rational(&rhs_rat, p, 2).unwrap();
            cells += 1;
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    let within_budget = c.started.elapsed().as_secs_f64() < 30.0;
    c.finish(
        failures == 0 && within_budget,
        format!("{cells} cells, {failures} failed"),
    );
}

/// 4. Both one-2-among-1s congruences mod p^2 for even k1+k2 <= 6 and all
///    primes up to 199.
#[test]
fn criterion_4_ppt_sweep() {
    let c = Criterion::new("4 (one-2-among-1s mod p^2, k1+k2 <= 6 even, p <= 199)");
    let (total, failures) = sweep_all(&["ppt.nonstar", "ppt.star"], 199);
    c.finish(
        failures.is_empty(),
        format!("{total} cells, {} failed", failures.len()),
    );
}

/// 5. The multi-variable value lists at exponents 1 and 2, weights <= 7,
///    primes <= 101.
#[test]
fn criterion_5_multivariable_lists() {
    let c = Criterion::new("5 (multi-variable value lists, weights <= 7, p <= 101)");
    let ids = [
        "mv.half2",
        "mv.2half.star",
        "mv.qb.star",
        "mv.lead2",
        "mv.212",
        "mv.trail2.star",
        "mv.trailhalf",
        "mv.h2h",
        "mv.leadhalf.star",
        "mv.single",
        "mv.hook.left",
        "mv.hook.right",
        "mv.double",
        "mv.gap",
        "mv.w3",
        "mva2.block",
        "mva2.ones2",
    ];
    let (total, failures) = sweep_all(&ids, 101);
    c.finish(
        failures.is_empty(),
        format!("{total} cells, {} failed", failures.len()),
    );
}

/// 6. The generalized Bernoulli congruences (mod p^3 main statements for
///    k in 2..=7, both parities, at p <= 61), the mod p^2 / mod p
///    corollaries, the Kummer-type congruence, and the four power-sum rows
///    mod p^4 — under 120 seconds.
#[test]
fn criterion_6_generalized_bernoulli() {
    let c = Criterion::new("6 (generalized Bernoulli suite mod p^3/p^2/p + power sums mod p^4)");
    let ids = [
        "genbern.main.odd",
        "genbern.main.even",
        "genbern.cor.mod2",
        "genbern.cor.mod1",
        "genbern.classical",
        "genbern.kummer",
        "powersum.mod4",
    ];
    let (total, failures) = sweep_all(&ids, 61);
    let within_budget = c.started.elapsed().as_secs_f64() < 120.0;
    c.finish(
        failures.is_empty() && within_budget,
        format!("{total} cells, {} failed", failures.len()),
    );
}

/// 7. Oracle equivalences: the running-sum path against naive enumeration on
///    500 randomized cases (p <= 31); the surjection decomposition against
///    direct enumeration (depth <= 3, weight <= 5, four arguments, p <= 31);
///    both dual constructions exhaustively to weight 12.
#[test]
fn criterion_7_oracle_equivalences() {
    let c = Criterion::new("7 (oracle equivalences)");
    let mut detail = Vec::new();

    // running-sum vs naive
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let primes = primes_in(2, 31);
    let mut fast_naive = 0;
    while fast_naive < 500 {
        let p = primes[rng.gen_range(0..primes.len())];
        let depth = rng.gen_range(1..=3);
        let mut parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=4)).collect();
        while parts.iter().sum::<u32>() > 6 {
            parts.pop();
        }
        if parts.is_empty() {
            parts.push(1);
        }
        let k = Index::new(parts);
        let star: bool = rng.gen();
        let end = if rng.gen() { End::Head } else { End::Tail };
        let n = rng.gen_range(1..=2);
        let t = rat(rng.gen_range(-6..=6), rng.gen_range(1..=6));
        if !eval::is_p_integral(&t, p) {
            continue;
        }
        let fast = fast_nested_eval(&k, &t, p, n, star, end).unwrap();
        let slow = fmp_one_var(&k, &t, p, n, star, end).unwrap();
        assert_eq!(fast, slow, "p={p} kk={k} star={star} end={end:?} t={t}");
        fast_naive += 1;
    }
    detail.push(format!("{fast_naive} fast/naive cases"));

    // decomposition vs direct
    let mut decomp = 0;
    for p in primes_in(3, 31) {
        for w in 2..=5u32 {
            for k in indices_of_weight(w) {
                if k.depth() > 3 {
                    continue;
                }
                for t in [rat_int(-1), rat_int(2), rat(1, 2), rat_int(3)] {
                    if !eval::is_p_unit(&t, p) {
                        continue;
                    }
                    let a = oy_li(&k, &t, p, 1).unwrap();
                    let b = oy_decompose(&k, &t, p, 1).unwrap();
                    assert_eq!(a, b, "p={p} kk={k} t={t}");
                    decomp += 1;
                }
            }
        }
    }
    detail.push(format!("{decomp} decomposition cases"));

    // dual constructions
    let mut duals = 0;
    for w in 1..=12u32 {
        for k in indices_of_weight(w) {
            assert_eq!(
                k.hoffman_dual(),
                k.hoffman_dual_powerset(),
                "dual mismatch at {k}"
            );
            duals += 1;
        }
    }
    detail.push(format!("{duals} dual pairs"));

    c.finish(true, detail.join(", "));
}

/// 8. The distribution relations for n in {-1, 2, 3, 4} at primes
///    p = 1 mod |n| up to 101, m <= 3, over the sampled arguments.
#[test]
fn criterion_8_distribution() {
    let c = Criterion::new("8 (distribution relations, n in {-1,2,3,4}, p <= 101)");
    let ids = [
        "dist.fp",
        "dist.ones.head",
        "dist.ones.tail",
        "dist.ones.headstar",
        "dist.ones.tailstar",
    ];
    let (total, failures) = sweep_all(&ids, 101);
    c.finish(
        failures.is_empty(),
        format!("{total} cells, {} failed", failures.len()),
    );
}

/// 9. The mutation sentinel: at least 3 randomly selected entries per run
///    must fail once their right side is perturbed by +1.
#[test]
fn criterion_9_mutation_sentinel() {
    let c = Criterion::new("9 (mutation sentinel)");
    let mut cfg = SuiteConfig::new(SuiteLevel::Quick);
    cfg.pmax = 31;
    cfg.sentinel_picks = 3;
    cfg.filters = vec!["fmzv.*".into(), "sv.*".into(), "ppt.*".into()];
    let report = run_suite(&cfg).unwrap();
    let tripped = report.sentinel().iter().filter(|s| s.tripped).count();
    c.finish(
        report.sentinel().len() >= 3 && tripped == report.sentinel().len(),
        format!(
            "{tripped}/{} perturbed cells failed as required",
            report.sentinel().len()
        ),
    );
}
