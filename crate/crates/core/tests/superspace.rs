//! The Δ operator, its Koszul brackets and nilpotency checks on small cases
//! with known answers.

use linf_core::examples::{example1_system_with, example2_system_with};
use linf_core::graded::Element;
use linf_core::rational::{rat, Rational};
use linf_core::series::Series;
use linf_core::superspace::{
    apply_delta, brackets_from_delta, delta_squared_check, koszul_bracket, nilpotency_conditions,
    DeltaSpec, GenFn, SuperMonomial, SuperPoly,
};
use linf_core::Error;

fn constant(c: i64, n: usize, order: usize) -> GenFn {
    GenFn::radial(Series::from_ints(&[c], order), n)
}

fn zero(n: usize, order: usize) -> GenFn {
    GenFn::zero(n, order)
}

fn ex1(order: usize) -> DeltaSpec {
    example1_system_with(1, order).delta.unwrap()
}

#[test]
fn delta_of_one_is_the_curvature() {
    assert!(apply_delta(&ex1(8), &SuperPoly::one(1)).unwrap().is_zero());
    let h = [constant(3, 1, 4), GenFn::radial(Series::from_ints(&[-2, 5], 4), 1)];
    let s = DeltaSpec::new(1, [zero(1, 4), zero(1, 4)], [vec![zero(1, 4)], vec![zero(1, 4)]], h).unwrap();
    let out = apply_delta(&s, &SuperPoly::one(1)).unwrap();
    let mut expected = SuperPoly::generator(1, 0).scaled(&rat(3));
    expected.add_scaled(&SuperPoly::generator(1, 1), &rat(-2));
    assert_eq!(out, expected);
}

#[test]
fn example1_delta_on_theta1() {
    let out = apply_delta(&ex1(8), &SuperPoly::generator(1, 0)).unwrap();
    assert_eq!(out, SuperPoly::generator(1, 2));
}

#[test]
fn example1_koszul_brackets() {
    let s = ex1(8);
    assert_eq!(koszul_bracket(&s, &[0, 1]).unwrap(), Element::basis(0));
    assert!(koszul_bracket(&s, &[1, 2]).unwrap().is_zero());
    assert_eq!(koszul_bracket(&s, &[1, 2, 2]).unwrap(), Element::term(2, rat(-1)));
}

#[test]
fn zero_spec_gives_zero_system() {
    let s = DeltaSpec::new(2, [zero(2, 6), zero(2, 6)], [vec![zero(2, 6); 2], vec![zero(2, 6); 2]], [
        zero(2, 6),
        zero(2, 6),
    ])
    .unwrap();
    assert!(brackets_from_delta(&s, 5).unwrap().is_empty());
}

#[test]
fn constant_g_is_nilpotent() {
    let g = |a: usize| (0..2).map(|i| constant(i64::from(a == i), 2, 6)).collect::<Vec<_>>();
    let s = DeltaSpec::new(2, [zero(2, 6), zero(2, 6)], [g(0), g(1)], [zero(2, 6), zero(2, 6)]).unwrap();
    assert!(delta_squared_check(&s, 6).unwrap().passed());
}

#[test]
fn mutated_b22_fails_with_witness() {
    let mut s = ex1(8);
    let g2 = s.g(1, 0).map_radial(|r| {
        let mut c = r.coeffs().to_vec();
        c[2] = Rational::new(1.into(), 2.into());
        Series::new(c)
    });
    s.set_g(1, 0, g2);
    let report = delta_squared_check(&s, 4).unwrap();
    let (mono, residue) = report.witness.expect("mutation must be detected");
    assert!(!residue.is_zero());
    assert!(mono.total_degree() <= 4);
    let witness = nilpotency_conditions(&s).witness_for_degree(4).unwrap().unwrap();
    assert_eq!(witness.condition, "first[0]");
}

#[test]
fn residuals_of_examples() {
    let r = nilpotency_conditions(&ex1(33));
    assert!(r.first[0].vanishes_through(32).unwrap());
    for row in &r.second {
        for e in row {
            assert!(e.vanishes_through(32).unwrap());
        }
    }
    assert!(r.third[0].vanishes_through(33).unwrap());

    let ex2 = example2_system_with(2, 3, 3, 1, 16).unwrap().delta.unwrap();
    let r = nilpotency_conditions(&ex2);
    assert!(r.vanishes_for_degree(16).unwrap());

    // Replacing G by 1 + P breaks G'(G + P) = G at order P.
    let mut bad = ex2.clone();
    for a in 0..2 {
        bad.set_g(a, a, bad.g(a, a).map_radial(|_| Series::from_ints(&[1, 1], 16)));
    }
    let r = nilpotency_conditions(&bad);
    assert!(!r.first[0].vanishes_through(1).unwrap());
    assert!(r.first[0].vanishes_through(0).unwrap());
}

#[test]
fn truncation_is_reported() {
    let s = ex1(5);
    assert!(matches!(delta_squared_check(&s, 6), Err(Error::Truncated { .. })));
    let (_, m) = SuperMonomial::new(&[0], vec![7]).unwrap();
    let p = SuperPoly::monomial(m, rat(1));
    assert!(matches!(apply_delta(&s, &p), Err(Error::Truncated { .. })));
    assert!(matches!(brackets_from_delta(&s, 8), Err(Error::Truncated { .. })));
}
