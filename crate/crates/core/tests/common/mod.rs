//! Operator specs shared by the equivalence tests: both examples, single
//! coefficient mutations of them, and one harmless reparametrization.

#![allow(dead_code)]

use linf_core::examples::{example1_system_with, example2_system_with};
use linf_core::linf::{suspend_system, verify_jacobi};
use linf_core::rational::{rat, ratio, Rational};
use linf_core::series::{solve_g2, Series};
use linf_core::superspace::{brackets_from_delta, delta_squared_check, DeltaSpec, GenFn};

pub struct Instance {
    pub name: &'static str,
    pub spec: DeltaSpec,
    /// Whether the instance is expected to be an L∞ structure.
    pub expect_nilpotent: bool,
}

fn with_coeff(g: &GenFn, k: usize, value: Rational) -> GenFn {
    g.map_radial(|s| {
        let mut c = s.coeffs().to_vec();
        c[k] = value;
        Series::new(c)
    })
}

pub fn example1_spec(order: usize) -> DeltaSpec {
    example1_system_with(1, order).delta.expect("one-boson frame")
}

pub fn example2_spec(order: usize) -> DeltaSpec {
    example2_system_with(2, 3, 3, 1, order).unwrap().delta.expect("two-fermion frame")
}

pub fn instances(order: usize) -> Vec<Instance> {
    let ex1 = example1_spec(order);
    let ex2 = example2_spec(order);
    let mut out = vec![
        Instance { name: "example 1", spec: ex1.clone(), expect_nilpotent: true },
        Instance { name: "example 2", spec: ex2.clone(), expect_nilpotent: true },
    ];

    // b_{2,2} = -1 becomes +1, i.e. the p² coefficient of g₂ flips sign.
    let mut s = ex1.clone();
    s.set_g(1, 0, with_coeff(ex1.g(1, 0), 2, ratio(1, 2)));
    out.push(Instance { name: "example 1, b22 = +1", spec: s, expect_nilpotent: false });

    // b_{2,3} = 1 becomes -1.
    let mut s = ex1.clone();
    s.set_g(1, 0, with_coeff(ex1.g(1, 0), 3, ratio(-1, 6)));
    out.push(Instance { name: "example 1, b23 = -1", spec: s, expect_nilpotent: false });

    let mut s = ex1.clone();
    s.set_f(0, with_coeff(ex1.f(0), 0, rat(-2)));
    out.push(Instance { name: "example 1, f1 = -2", spec: s, expect_nilpotent: false });

    let mut s = ex1.clone();
    s.set_g(0, 0, with_coeff(ex1.g(0, 0), 1, rat(2)));
    out.push(Instance { name: "example 1, g1 = 1 + 2p", spec: s, expect_nilpotent: false });

    // B_2 = -1 becomes 0 in G(P) = Σ B_M P^M / M!.
    let mut s = ex2.clone();
    for a in 0..2 {
        s.set_g(a, a, with_coeff(ex2.g(a, a), 2, rat(0)));
    }
    out.push(Instance { name: "example 2, B2 = 0", spec: s, expect_nilpotent: false });

    // B_3 = 4 becomes 5.
    let mut s = ex2.clone();
    for a in 0..2 {
        s.set_g(a, a, with_coeff(ex2.g(a, a), 3, ratio(5, 6)));
    }
    out.push(Instance { name: "example 2, B3 = 5", spec: s, expect_nilpotent: false });

    // Only the second fermion's G changes: the two equations no longer match.
    let mut s = ex2.clone();
    s.set_g(1, 1, with_coeff(ex2.g(1, 1), 2, rat(0)));
    out.push(Instance { name: "example 2, B2 = 0 for theta2 only", spec: s, expect_nilpotent: false });

    // g₂ rebuilt from the one-boson solver with g₂(0) / g₁(0) = 2 instead of 1.
    let mut s = ex1.clone();
    let g1 = ex1.g(0, 0).radial_part().clone();
    let f1 = ex1.f(0).radial_part().clone();
    let g2 = solve_g2(&g1, &f1, rat(2)).unwrap().truncate(order);
    s.set_g(1, 0, GenFn::radial(g2, 1));
    out.push(Instance { name: "example 1, g2(0) = 2", spec: s, expect_nilpotent: true });

    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub jacobi: bool,
    pub nilpotent: bool,
}

/// Jacobi identities of the reconstructed brackets through `bound`, and
/// `Δ² = 0` on monomials through the same degree.
pub fn evaluate(spec: &DeltaSpec, bound: usize) -> Outcome {
    let w = brackets_from_delta(spec, bound).unwrap();
    let v = suspend_system(&w).unwrap();
    Outcome {
        jacobi: verify_jacobi(&v, bound).unwrap().passed(),
        nilpotent: delta_squared_check(spec, bound).unwrap().passed(),
    }
}
