use fmzv::runner::{run_suite, SuiteConfig, SuiteLevel};

#[test]
fn quick_suite_all_pass() {
    let t0 = std::time::Instant::now();
    let cfg = SuiteConfig::new(SuiteLevel::Quick);
    let report = run_suite(&cfg).unwrap();
    println!(
        "quick suite: {} records, {} failed, {}/{} sentinels tripped, {:.1?}",
        report.summary.records,
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
