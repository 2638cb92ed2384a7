//! Acceptance run: every criterion at its default size, one PASS/FAIL line
//! each. Show the lines with `cargo test --test acceptance -- --nocapture`.
//!
//! All arithmetic is exact, so the tolerance on every identity is zero
//! failures. The floors below are the fewest recorded checks each suite
//! must make at the default size; a suite that quietly skips its work fails
//! them.

use clifford_core::harness::{self, RunConfig, SuiteResult};

/// `(criterion, suite, minimum checks)` at 200 samples and degree bound 3.
const CRITERIA: [(u32, &str, usize); 11] = [
    // 200 line pairs, one check each.
    (1, "main_theorem", 200),
    // 200 elements, square identity plus invertibility dichotomy.
    (2, "local_quadratic", 400),
    // default basis (2), 20 random bases, 100 products.
    (3, "annihilator", 122),
    // 200 trials: plane point, hull of the plane point, meet identity.
    (4, "f_rational", 600),
    // 50 values of i, each: line check, 20 y, absolute point, 100 lines.
    (5, "k_rational", 50 * (1 + 20 + 1 + 100)),
    // 200 triples, degenerate ones excepted.
    (6, "double_space", 190),
    // 50 classes, at least one regulus check each.
    (7, "regular_spread", 50),
    // 100 values of b, at least six checks each.
    (8, "matrices", 600),
    // 20 forms x 200 lines x 4 line checks, 10 elliptic forms x 500 points,
    // 50 cosymplectic pairs.
    (9, "polarities", 20 * 200 * 4 + 10 * 500 + 50),
    // 7 identities, distinctness, incidence.
    (10, "fano", 9),
    // all 64 single-constant flips.
    (11, "mutation", 64),
];

fn verdict(criterion: u32, result: &SuiteResult, floor: usize) -> (bool, String) {
    let enough = result.samples >= floor;
    let ok = result.failures == 0 && enough;
    let mut line = format!(
        "{} criterion {:>2} {:<18} checks={} (min {}) failures={} skipped={}",
        if ok { "PASS" } else { "FAIL" },
        criterion,
        result.name,
        result.samples,
        floor,
        result.failures,
        result.skipped
    );
    if let Some(w) = result.witnesses.first() {
        line.push_str(&format!("\n    first witness: {w}"));
    }
    (ok, line)
}

#[test]
fn acceptance_criteria() {
    let config = RunConfig { samples: 200, deg_bound: 3, ..RunConfig::default() };
    let start = std::time::Instant::now();
    let report = harness::run(&config).expect("all suites known");
    let elapsed = start.elapsed();
    let mut failed = Vec::new();
    for (criterion, suite, floor) in CRITERIA {
        let result = report
            .suites
            .iter()
            .find(|s| s.name.ends_with(suite))
            .unwrap_or_else(|| panic!("suite {suite} missing from report"));
        let (ok, line) = verdict(criterion, result, floor);
        println!("{line}");
        if !ok {
            failed.push(criterion);
        }
    }
    // Wall time depends on the core count (trials run on rayon), so it is
    // reported, not asserted.
    println!("INFO total {:.1}s on {} threads", elapsed.as_secs_f64(), rayon::current_num_threads());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
