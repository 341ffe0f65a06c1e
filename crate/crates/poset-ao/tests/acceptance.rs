//! Acceptance suite: one test per verification criterion, at the full
//! sweep sizes. Each test prints its pass/fail line; `poset-ao verify`
//! runs the same battery from the command line.

use poset_ao::cli::{format_criterion, run_criterion, VerifyOptions};

fn check(index: usize) {
    let opts = VerifyOptions::default();
    let result = run_criterion(index, &opts);
    println!("{}", format_criterion(&result));
    assert!(result.passed, "{}", result.detail);
}

#[test]
fn criterion_01_lambda_formula_consistency() {
    check(1);
}

#[test]
fn criterion_02_x_identity() {
    check(2);
}

#[test]
fn criterion_03_x_via_maximisation() {
    check(3);
}

#[test]
fn criterion_04_constructions_vs_solver() {
    check(4);
}

#[test]
fn criterion_05_boolean_lattice_example() {
    check(5);
}

#[test]
fn criterion_06_sqrt_minimum() {
    check(6);
}

#[test]
fn criterion_07_acyclic_minimum_at_desk_scale() {
    check(7);
}

#[test]
fn criterion_08_oracle_equivalence() {
    check(8);
}

#[test]
fn criterion_09_bound_invariants() {
    check(9);
}

#[test]
fn criterion_10_planar_example() {
    check(10);
}

#[test]
fn criterion_11_structural_lemmas() {
    check(11);
}
