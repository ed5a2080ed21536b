//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use ballconv::lab::run_suite;

const CRITERIA: [(&str, &str); 12] = [
    ("lemma1", "ball hull idempotence, monotonicity, hulls of balls, radius preservation"),
    ("ineq1a", "circumradius between half the diameter and n/(n+1) times the diameter"),
    ("lemma2", "circumsphere restriction keeps the circumradius and has a far pair"),
    ("prop1", "separation and supporting-sphere certificates re-verify"),
    ("example1", "two disjoint b-convex segments in l1:3 admit no separating unit sphere"),
    ("example2", "exposed b-faces and generating sets of the unit square in linf:2"),
    ("prop2-witness", "non-strict norms flatten spindles, polygonal norms approach the round spindle"),
    ("thm3", "hull equality agrees with the face-meeting criterion"),
    ("prop4", "completeness of boxes and agreement of the completion criteria"),
    ("example4", "four-dimensional oracle consistent with the segment and disc hulls"),
    ("spindle", "spindle probe finds the triangle violation and nothing on b-convex bodies"),
    ("kernel", "LP and hull membership agree with independent oracles on all fixtures"),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (suite, what)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let report = run_suite(suite).expect("known suite");
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [{suite}] {verdict}: {what} ({} checks, {:.2}s)",
            i + 1,
            report.checks,
            start.elapsed().as_secs_f64()
        );
        for note in &report.notes {
            println!("    note: {note}");
        }
        for f in report.failures.iter().take(10) {
            println!("    failure: {f}");
        }
        if !report.passed() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
