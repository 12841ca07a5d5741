//! Acceptance suite: every exit criterion as a test, one pass/fail line per
//! criterion. Tolerances are pinned in the library's `checks` module; the
//! runtime budgets are asserted here.
//!
//! Criterion 3 carries one known-red assertion: the published magnitudes of
//! two invariants on the `xccx6` state contradict the published definitions
//! of those invariants (see `criterion_3_xccx6_consistent_routes` for the
//! values all implemented routes agree on). The dedicated test below asserts
//! the published numbers anyway and is expected to fail.

use std::time::Instant;

use spinor_invariants::catalog::catalog;
use spinor_invariants::checks::{self, SuiteReport};
use spinor_invariants::state::examples::catalog_state;

const SEED: u64 = 0;

fn report_line(criterion: &str, rep: &SuiteReport, elapsed: f64) -> bool {
    let failures = rep.failures();
    let worst = rep
        .checks
        .iter()
        .map(|c| c.residual / c.tolerance)
        .fold(0.0f64, f64::max);
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {criterion}: {status} ({} checks, worst residual/tol {worst:.2e}, {elapsed:.2}s)",
        rep.checks.len()
    );
    for f in &failures {
        println!(
            "    failing check {}: residual {:.3e} tolerance {:.1e}",
            f.name, f.residual, f.tolerance
        );
    }
    failures.is_empty()
}

#[test]
fn criterion_1_algebra() {
    let start = Instant::now();
    let rep = checks::algebra_suite();
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line("criterion 1 (algebra, 1e-12)", &rep, elapsed);
    assert!(ok);
    assert!(
        elapsed < 1.0,
        "algebra suite budget is 1 s, took {elapsed:.2}s"
    );
}

#[test]
fn criterion_2_invariance() {
    let start = Instant::now();
    let rep = checks::invariance_suite(SEED);
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line("criterion 2 (invariance, 1e-8)", &rep, elapsed);
    assert!(ok);
    assert!(
        elapsed < 60.0,
        "invariance budget is 60 s, took {elapsed:.2}s"
    );
}

#[test]
fn criterion_3_two_particle_examples() {
    let start = Instant::now();
    let full = checks::examples_suite();
    let rep = SuiteReport {
        suite: "examples-2p",
        checks: full
            .checks
            .iter()
            .filter(|c| {
                let state = c.name.split('/').next().unwrap_or("");
                let two_particle = catalog_state(state)
                    .map(|e| e.state.particles() == 2)
                    .unwrap_or(false);
                // the two published xccx6 magnitudes that contradict the
                // published definitions are asserted in their own test
                two_particle && c.name != "xccx6/T1" && c.name != "xccx6/T2"
            })
            .cloned()
            .collect(),
    };
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 3 (two-particle worked examples, 1e-9)",
        &rep,
        elapsed,
    );
    assert!(ok);
    assert!(elapsed < 5.0, "two-particle examples budget is 5 s");
}

/// The published values |T1| = |T2| = 4/3 on the xccx6 state. These numbers
/// are not attainable: |T1| is bounded by 1/2 on normalized two-coefficient
/// states of this shape, and every implemented route (trace form, alternate
/// forms, transcribed expansion) agrees on 4/9 and 2/9 instead, while the
/// third published magnitude |N1N4-N2N3| = 6/9 is reproduced exactly. Kept
/// as stated; this test documents the discrepancy by failing.
#[test]
fn criterion_3_xccx6_published_values() {
    let entry = catalog_state("xccx6").unwrap();
    let cat = catalog();
    let t1 = cat.eval("T1", &entry.state).unwrap().norm();
    let t2 = cat.eval("T2", &entry.state).unwrap().norm();
    println!(
        "ACCEPTANCE criterion 3 (xccx6 published magnitudes): computed |T1| = {t1:.12}, |T2| = {t2:.12}, published 4/3"
    );
    assert!(
        (t1 - 4.0 / 3.0).abs() <= 1e-9,
        "|T1| on xccx6: computed {t1}, published 4/3 (known source defect; see notes)"
    );
    assert!(
        (t2 - 4.0 / 3.0).abs() <= 1e-9,
        "|T2| on xccx6: computed {t2}, published 4/3 (known source defect; see notes)"
    );
}

/// All implemented routes agree on the xccx6 values, and the one published
/// magnitude that is consistent (6/9) is reproduced.
#[test]
fn criterion_3_xccx6_consistent_routes() {
    let entry = catalog_state("xccx6").unwrap();
    let cat = catalog();
    for (name, expect) in [
        ("T1", 4.0 / 9.0),
        ("T2", 2.0 / 9.0),
        ("N1N4mN2N3", 6.0 / 9.0),
    ] {
        let v = cat.eval(name, &entry.state).unwrap().norm();
        assert!(
            (v - expect).abs() < 1e-12,
            "{name} on xccx6: {v} vs {expect}"
        );
        let residual = cat.alt_forms_residual(name, &entry.state).unwrap();
        assert!(residual < 1e-9, "{name} routes disagree: {residual}");
    }
    println!("ACCEPTANCE criterion 3 (xccx6 cross-route agreement): PASS");
}

#[test]
fn criterion_4_three_particle_examples() {
    let start = Instant::now();
    let full = checks::examples_suite();
    let rep = SuiteReport {
        suite: "examples-3p",
        checks: full
            .checks
            .iter()
            .filter(|c| {
                let state = c.name.split('/').next().unwrap_or("");
                catalog_state(state)
                    .map(|e| e.state.particles() == 3)
                    .unwrap_or(false)
            })
            .cloned()
            .collect(),
    };
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 4 (three-particle worked examples, 1e-9)",
        &rep,
        elapsed,
    );
    assert!(ok);
    assert!(elapsed < 10.0, "three-particle examples budget is 10 s");
}

#[test]
fn criterion_5_ranks_and_dependencies() {
    let start = Instant::now();
    let mut rep = checks::rank_suite(SEED);
    rep.checks.extend(checks::dependencies_suite(SEED).checks);
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 5 (span ranks 27/20/21/20 and 12 dependencies, 1e-9)",
        &rep,
        elapsed,
    );
    assert!(ok);
    assert!(
        elapsed < 120.0,
        "rank suite budget is 120 s, took {elapsed:.2}s"
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let start = Instant::now();
    let rep = checks::oracle_suite(SEED);
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 6 (planner vs oracle 1e-10, expansions 1e-10)",
        &rep,
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_7_reductions() {
    let start = Instant::now();
    let rep = checks::reductions_suite(SEED);
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 7 (energy-block reductions 1e-8, chirality nullity 1e-10)",
        &rep,
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_8_balancedness() {
    let start = Instant::now();
    let rep = checks::balance_suite();
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line("criterion 8 (balancedness verdicts, exact)", &rep, elapsed);
    assert!(ok);
}

#[test]
fn criterion_9_dynamics() {
    let start = Instant::now();
    let rep = checks::dynamics_suite();
    let elapsed = start.elapsed().as_secs_f64();
    let ok = report_line(
        "criterion 9 (dynamics laws and integrator order)",
        &rep,
        elapsed,
    );
    assert!(ok);
}
