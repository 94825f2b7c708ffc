//! One test per row of the verification table, each printing its verdict.
//! `cargo test --test acceptance -- --nocapture` shows the full table.

use subdepth::checks::{self, CheckRow};

fn verdict(row: CheckRow) {
    let status = if row.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {:02} {status}: {} [{}]",
        row.id, row.name, row.details
    );
    assert!(row.passed, "criterion {:02}: {}", row.id, row.details);
}

#[test]
fn criterion_01_dihedral_matrix_in_s4() {
    verdict(checks::check_dihedral_matrix_in_s4());
}

#[test]
fn criterion_02_three_by_two_example() {
    verdict(checks::check_three_by_two_example());
}

#[test]
fn criterion_03_dynkin_chains() {
    verdict(checks::check_dynkin_chains());
}

#[test]
fn criterion_04_group_pipeline_depths() {
    verdict(checks::check_group_pipeline_depths());
}

#[test]
fn criterion_05_dihedral_matrix_in_s5() {
    verdict(checks::check_dihedral_matrix_in_s5());
}

#[test]
fn criterion_06_eigenvalue_spectra() {
    verdict(checks::check_eigenvalue_spectra());
}

#[test]
fn criterion_07_depth_bounds() {
    verdict(checks::check_depth_bounds());
}

#[test]
fn criterion_08_symmetric_family() {
    verdict(checks::check_symmetric_family());
}

#[test]
fn criterion_09_alternating_family() {
    verdict(checks::check_alternating_family());
}

#[test]
fn criterion_10_operator_identities() {
    verdict(checks::check_operator_identities());
}

#[test]
fn criterion_11_random_matrix_sweep() {
    verdict(checks::check_random_matrix_sweep());
}

#[test]
fn criterion_12_quotient_monotonicity() {
    verdict(checks::check_quotient_monotonicity());
}
