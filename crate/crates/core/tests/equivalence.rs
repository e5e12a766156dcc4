//! Jacobi identities of the bracket hierarchy hold exactly when `Δ² = 0`.

mod common;

use linf_core::superspace::nilpotency_conditions;

const BOUND: usize = 6;

#[test]
fn jacobi_iff_nilpotent_on_all_instances() {
    for inst in common::instances(12) {
        let out = common::evaluate(&inst.spec, BOUND);
        assert_eq!(out.jacobi, out.nilpotent, "{}: {out:?}", inst.name);
        assert_eq!(out.nilpotent, inst.expect_nilpotent, "{}", inst.name);
    }
}

#[test]
fn residuals_agree_with_direct_check() {
    for inst in common::instances(12) {
        let residuals = nilpotency_conditions(&inst.spec);
        for d in 0..=8 {
            let direct = linf_core::superspace::delta_squared_check(&inst.spec, d).unwrap();
            let series = residuals.vanishes_for_degree(d).unwrap();
            assert_eq!(direct.passed(), series, "{} at degree {d}", inst.name);
        }
    }
}
