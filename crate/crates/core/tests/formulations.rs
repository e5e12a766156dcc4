//! Both examples in both formulations: the bracket tables, the Δ operator and
//! the tables reconstructed from Δ must agree.

use linf_core::examples::{example1_system_with, example2_system_with};
use linf_core::linf::{desuspend_system, verify_jacobi};
use linf_core::superspace::{brackets_from_delta, delta_squared_check, nilpotency_conditions};

#[test]
fn example1_desuspension_matches_stored_table() {
    let ex = example1_system_with(10, 12);
    let w = desuspend_system(&ex.v).unwrap();
    assert_eq!(w.first_difference(&ex.w, 10), None);
}

#[test]
fn example1_delta_reproduces_table() {
    let ex = example1_system_with(8, 12);
    let from_delta = brackets_from_delta(ex.delta.as_ref().unwrap(), 8).unwrap();
    assert_eq!(from_delta.first_difference(&ex.w, 8), None);
}

#[test]
fn example1_is_nilpotent_and_jacobi() {
    let ex = example1_system_with(8, 12);
    assert!(verify_jacobi(&ex.v, 8).unwrap().passed());
    assert!(verify_jacobi(&ex.w, 8).unwrap().passed());
    let d = ex.delta.unwrap();
    assert!(delta_squared_check(&d, 12).unwrap().passed());
    assert!(nilpotency_conditions(&d).vanishes_for_degree(12).unwrap());
}

#[test]
fn example2_desuspension_matches_stored_table() {
    let ex = example2_system_with(3, 3, 3, 7, 8).unwrap();
    let w = desuspend_system(&ex.v).unwrap();
    assert_eq!(w.first_difference(&ex.w, 7), None);
}

#[test]
fn example2_delta_reproduces_table() {
    let ex = example2_system_with(2, 3, 3, 6, 8).unwrap();
    let from_delta = brackets_from_delta(ex.delta.as_ref().unwrap(), 6).unwrap();
    assert_eq!(from_delta.first_difference(&ex.w, 6), None);
}

#[test]
fn example2_is_nilpotent_and_jacobi() {
    let ex = example2_system_with(2, 3, 3, 5, 10).unwrap();
    assert!(verify_jacobi(&ex.v, 5).unwrap().passed());
    let d = ex.delta.unwrap();
    let report = delta_squared_check(&d, 8).unwrap();
    assert!(report.passed(), "{:?}", report.witness);
    assert!(nilpotency_conditions(&d).vanishes_for_degree(10).unwrap());
}
