//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use linf_core::examples::{b_closed, c2_daily, example1_system_with, example2_system_with};
use linf_core::graded::Element;
use linf_core::linf::verify_jacobi;
use linf_core::rational::{factorial, neg_one_pow, pow, rat, Rational};
use linf_core::series::{
    coefficient_ratio, g_series, lambert_w_series, nilcheck_one_boson, solve_f1, solve_g2, Series,
};
use linf_core::superspace::{brackets_from_delta, delta_squared_check};

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Verdict { passed, detail: detail.into() }
    }
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn example1_jacobi() -> Verdict {
    let ex = example1_system_with(8, 8);
    let (report, took) = timed(|| verify_jacobi(&ex.v, 8).unwrap());
    let fast = took < Duration::from_secs(5);

    let mut mutated = ex.v.clone();
    // l_4(v2, w, w, w) = C_4 w with C_4 = -1 replaced by +1.
    mutated.insert(&[1, 2, 2, 2], Element::term(2, rat(1))).unwrap();
    let bad = verify_jacobi(&mutated, 8).unwrap();
    let failure = bad.first_failure();
    let caught = failure.is_some_and(|a| {
        a.arity == 4 && a.counterexample.as_ref().is_some_and(|c| c.inputs == [0, 1, 2, 2])
    });
    Verdict::new(
        report.passed() && fast && caught,
        format!(
            "n_max 8 in {took:.2?}; C4 = +1 first fails at {}",
            failure.map_or("nothing".into(), |a| format!(
                "arity {} on {}",
                a.arity,
                bad.space.format_tuple(&a.counterexample.as_ref().unwrap().inputs)
            ))
        ),
    )
}

fn example1_nilpotency() -> Verdict {
    let spec = example1_system_with(1, 32).delta.unwrap();
    let report = delta_squared_check(&spec, 12).unwrap();

    // g' costs one order, so the residual through p^32 needs data through p^33.
    let spec33 = example1_system_with(1, 33).delta.unwrap();
    let s = |g: &linf_core::superspace::GenFn| g.radial_part().clone();
    let residual = nilcheck_one_boson(&s(spec33.f(0)), &s(spec33.f(1)), &s(spec33.g(0, 0)), &s(spec33.g(1, 0)));
    let zero = residual.order() >= 32 && residual.truncate(32).is_zero();
    Verdict::new(
        report.passed() && zero,
        format!(
            "{} monomials up to degree 12; residual zero through p^{}",
            report.monomials_checked,
            residual.order()
        ),
    )
}

fn formulation_equivalence() -> Verdict {
    let ex1 = example1_system_with(8, 32);
    let d1 = brackets_from_delta(ex1.delta.as_ref().unwrap(), 8).unwrap();
    let diff1 = d1.first_difference(&ex1.w, 8);
    let ex2 = example2_system_with(2, 3, 3, 6, 32).unwrap();
    let d2 = brackets_from_delta(ex2.delta.as_ref().unwrap(), 6).unwrap();
    let diff2 = d2.first_difference(&ex2.w, 6);
    Verdict::new(
        diff1.is_none() && diff2.is_none() && d1.len() == ex1.w.len() && d2.len() == ex2.w.len(),
        format!("example 1: {} entries, example 2: {} entries", d1.len(), d2.len()),
    )
}

fn example2_jacobi() -> Verdict {
    let ex = example2_system_with(3, 3, 3, 6, 8).unwrap();
    let (report, took) = timed(|| verify_jacobi(&ex.v, 6).unwrap());
    let tuples: usize = report.arities.iter().map(|a| a.tuples_checked).sum();
    Verdict::new(
        report.passed() && took < Duration::from_secs(60),
        format!("{tuples} tuples through arity 6 in {took:.2?}"),
    )
}

fn g_closed_form() -> Verdict {
    let g = g_series(20);
    let bad: Vec<usize> = (0..=20)
        .filter(|&n| g.coeff(n).unwrap() * fact(n) != pow(&rat(1 - n as i64), n as i64 - 1))
        .collect();
    Verdict::new(bad.is_empty(), format!("n!·g_n = (1-n)^(n-1) for 0 ≤ n ≤ 20; mismatches {bad:?}"))
}

fn lambert() -> Verdict {
    let w = lambert_w_series(20);
    let bad: Vec<usize> = (1..=20)
        .filter(|&n| w.coeff(n).unwrap() * fact(n) != pow(&rat(-(n as i64)), n as i64 - 1))
        .collect();
    let g = g_series(20);
    let exp_ok = w.exp().unwrap() == g;
    let p = Series::variable(20);
    let product_ok = &w * &g == p;
    Verdict::new(
        bad.is_empty() && exp_ok && product_ok,
        format!("closed form mismatches {bad:?}; G = exp(W): {exp_ok}; W·G = P: {product_ok}"),
    )
}

fn triangulation() -> Verdict {
    let bad: Vec<usize> = (3..=12)
        .filter(|&n| {
            let sign = neg_one_pow((n * (n - 1) / 2) as i64) * neg_one_pow(n as i64 - 1);
            let desuspended = sign * c2_daily(n).unwrap();
            let closed = pow(&rat(2 - n as i64), n as i64 - 2);
            !(desuspended == closed && closed == b_closed(n - 1))
        })
        .collect();
    Verdict::new(bad.is_empty(), format!("3 ≤ n ≤ 12; mismatches {bad:?}"))
}

fn random_series(rng: &mut StdRng, order: usize, nonzero_constant: bool) -> Series {
    Series::from_fn(order, |k| {
        let num = rng.random_range(-9i64..=9);
        let den = rng.random_range(1i64..=5);
        if k == 0 && nonzero_constant && num == 0 {
            Rational::one()
        } else {
            Rational::new(num.into(), den.into())
        }
    })
}

fn solvers() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = 0;
    for _ in 0..100 {
        let order = rng.random_range(1..=8);
        let g1 = random_series(&mut rng, order, true);
        let g2 = random_series(&mut rng, order, false);
        let zero = Series::zero(order);
        let f1 = solve_f1(&g1, &g2).unwrap();
        if !nilcheck_one_boson(&f1, &zero, &g1, &g2).is_zero() {
            failures += 1;
        }
        let r = Rational::new(rng.random_range(-5i64..=5).into(), 1.into());
        let f1 = random_series(&mut rng, order, false);
        let g2 = solve_g2(&g1, &f1, r).unwrap();
        if !nilcheck_one_boson(&f1, &zero, &g1, &g2).is_zero() {
            failures += 1;
        }
    }

    let order = 32;
    let g1 = Series::from_ints(&[1, 1], order);
    let f1 = Series::from_ints(&[-1], order);
    let g2 = solve_g2(&g1, &f1, Rational::one()).unwrap();
    let log = Series::variable(order).ln1p().unwrap();
    let closed = &g1 * &(&Series::one(order) - &log);
    let example_ok = g2.agrees_through(&closed, order);
    Verdict::new(
        failures == 0 && example_ok,
        format!("{failures} nonzero residuals in 200 solves; example 1 g2 through p^{order}: {example_ok}"),
    )
}

fn mutation_suite() -> Verdict {
    const BOUND: usize = 6;
    let mut lines = Vec::new();
    let mut ok = true;
    let mut mutants = 0;
    for inst in common::instances(12) {
        let out = common::evaluate(&inst.spec, BOUND);
        ok &= out.jacobi == out.nilpotent && out.nilpotent == inst.expect_nilpotent;
        mutants += usize::from(!inst.expect_nilpotent);
        lines.push(format!("{} {}/{}", inst.name, out.jacobi, out.nilpotent));
    }
    Verdict::new(ok && mutants >= 5, format!("{mutants} failing mutants; jacobi/nilpotent: {}", lines.join(", ")))
}

fn ratio_diagnostic() -> Verdict {
    let w = lambert_w_series(41);
    let ratio = coefficient_ratio(&w, 40).unwrap();
    let e = std::f64::consts::E;
    let rel = (ratio - e).abs() / e;
    Verdict::new(rel < 0.05, format!("|c41/c40| = {ratio:.5}, relative distance from e {rel:.4}"))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("example 1 Jacobi identities", example1_jacobi),
        ("example 1 nilpotency", example1_nilpotency),
        ("bracket tables from Δ", formulation_equivalence),
        ("example 2 Jacobi identities", example2_jacobi),
        ("G series closed form", g_closed_form),
        ("Lambert W series", lambert),
        ("coefficient triangulation", triangulation),
        ("one-boson solvers", solvers),
        ("Jacobi iff nilpotent under mutation", mutation_suite),
        ("Lambert ratio near e", ratio_diagnostic),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        all &= v.passed;
        println!("criterion {:>2} {} {name}: {}", k + 1, if v.passed { "PASS" } else { "FAIL" }, v.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
