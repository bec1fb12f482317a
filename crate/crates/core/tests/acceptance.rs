//! The acceptance gate: one test per criterion.
//!
//! Each test runs its criterion through the library's own verification
//! module and prints the criterion's one-line pass/fail summary (visible
//! with `cargo test --test acceptance -- --nocapture`, or automatically on
//! failure). Budgets, trial counts, and seeds are pinned in
//! `latfree::verify`, not here, so the CLI and this gate check the same
//! thing.

use latfree::verify::run_criterion;

fn check(number: usize) {
    let report = run_criterion(number).expect("criterion ran to completion");
    println!("{report}");
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_catalog_verification() {
    check(1);
}

#[test]
fn criterion_2_sweep_reproduction() {
    check(2);
}

#[test]
fn criterion_3_planar_classifications() {
    check(3);
}

#[test]
fn criterion_4_closed_form_oracle() {
    check(4);
}

#[test]
fn criterion_5_height_bound_spot_checks() {
    check(5);
}

#[test]
fn criterion_6_property_suites() {
    check(6);
}

#[test]
fn criterion_7_growth_constants() {
    check(7);
}

#[test]
fn criterion_8_q2_separation() {
    check(8);
}
