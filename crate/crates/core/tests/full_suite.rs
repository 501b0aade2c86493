//! The whole registry swept to its caps at the full level: every entry must
//! pass at every admissible prime up to 199 (or the entry's own cost cap).

use fmzv::runner::{run_suite, SuiteConfig, SuiteLevel};

#[test]
fn full_suite_all_pass() {
    let t0 = std::time::Instant::now();
    let cfg = SuiteConfig::new(SuiteLevel::Full);
    let report = run_suite(&cfg).unwrap();
    println!(
        "full suite: {} records over {} entries, {} failed, sentinel {}/{}, {:.1?}",
        report.summary.records,
        report.summary.entries,
        report.summary.failed,
        report.summary.sentinel_tripped,
        report.summary.sentinel_total,
        t0.elapsed()
    );
    for r in report.records.iter().filter(|r| !r.pass).take(20) {
        println!(
            "FAIL {} [{}] p={} lhs={} rhs={}",
            r.id, r.params, r.p, r.lhs, r.rhs
        );
    }
    assert!(report.all_pass());
}
