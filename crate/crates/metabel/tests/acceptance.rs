//! Acceptance gate: one test per criterion, one pass/fail line each.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use metabel::selftest::{self, CriterionResult};

fn gate(r: CriterionResult) {
    println!("{}", r.line());
    assert!(r.pass, "{}", r.line());
}

#[test]
fn criterion_01_datum_laws_match_associativity() {
    gate(selftest::criterion_1());
}

#[test]
fn criterion_02_length4_vanishing_equals_abelian_derived() {
    gate(selftest::criterion_2());
}

#[test]
fn criterion_03_decompose_rebuild_round_trip() {
    gate(selftest::criterion_3());
}

#[test]
fn criterion_04_abelian_pair_sums_are_metabelian() {
    gate(selftest::criterion_4());
}

#[test]
fn criterion_05_homothety_matches_isomorphism() {
    gate(selftest::criterion_5());
}

#[test]
fn criterion_06_structured_group_realizes_automorphisms() {
    gate(selftest::criterion_6());
}

#[test]
fn criterion_07_extension_counts_agree_three_ways() {
    gate(selftest::criterion_7());
}

#[test]
fn criterion_08_line_kernel_extensions_count_p_to_n_squared() {
    gate(selftest::criterion_8());
}

#[test]
fn criterion_09_catalog_families_verify_and_pair() {
    gate(selftest::criterion_9());
}

#[test]
fn criterion_10_exact_linear_algebra_substrate() {
    gate(selftest::criterion_10());
}
