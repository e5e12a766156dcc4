use super::delta::{apply_delta, DeltaSpec};
use super::poly::SuperPoly;
use super::FERMIONS;
use crate::error::{Error, Result};
use crate::exec::{map_collect, Strategy};
use crate::graded::{Element, Generator, GradedSpace, Sign};
use crate::linf::{canonical_tuples, BracketSystem, Grading, Symmetry};

/// `W` with basis `θ₁, θ₂` (degree −1) and `N` bosons (degree 0).
pub fn superspace_basis(n_bosons: usize) -> GradedSpace {
    let mut gens = vec![Generator::new("theta1", -1), Generator::new("theta2", -1)];
    if n_bosons == 1 {
        gens.push(Generator::new("x", 0));
    } else {
        gens.extend((1..=n_bosons).map(|i| Generator::new(format!("x{i}"), 0)));
    }
    GradedSpace::new("W", gens).expect("distinct generator names")
}

fn generator_parity(index: usize) -> bool {
    index < FERMIONS
}

/// `[..[[Δ, z₁], z₂].., z_k]` applied to `w`.
fn nested_commutator(spec: &DeltaSpec, inputs: &[usize], w: &SuperPoly) -> Result<SuperPoly> {
    let Some((&last, rest)) = inputs.split_last() else {
        return apply_delta(spec, w);
    };
    // Δ is odd, so the inner operator has parity 1 + Σ ε(z_j), j < k.
    let inner_odd = rest.iter().fold(true, |acc, &z| acc ^ generator_parity(z));
    let sign = Sign::from_parity(!(inner_odd && generator_parity(last)));

    let mut out = nested_commutator(spec, rest, &w.left_mul_generator(last))?;
    let tail = nested_commutator(spec, rest, w)?.left_mul_generator(last);
    for (m, c) in tail.iter() {
        out.add_signed(sign, m.clone(), c.clone());
    }
    Ok(out)
}

/// The Koszul bracket `Φⁿ(z₁, .., z_n) = [..[Δ, z₁].., z_n](1)` on W
/// generators (indices in [`superspace_basis`] order).
pub fn koszul_bracket(spec: &DeltaSpec, inputs: &[usize]) -> Result<Element> {
    let dim = FERMIONS + spec.n_bosons();
    if let Some(&bad) = inputs.iter().find(|&&i| i >= dim) {
        return Err(Error::ForeignGenerator { index: bad, dim });
    }
    let value = nested_commutator(spec, inputs, &SuperPoly::one(spec.n_bosons()))?;
    let mut out = Element::zero();
    for (m, c) in value.iter() {
        match m.as_generator() {
            Some(g) => out.add_term(g, c.clone()),
            None => {
                return Err(Error::NotLinear(format!(
                    "bracket on {:?} has the nonlinear term {}",
                    inputs,
                    m.name()
                )))
            }
        }
    }
    Ok(out)
}

/// Tabulates every Koszul bracket up to `max_arity` as a symmetric system on
/// `W`.
pub fn brackets_from_delta(spec: &DeltaSpec, max_arity: usize) -> Result<BracketSystem> {
    brackets_from_delta_with(spec, max_arity, Strategy::default())
}

pub fn brackets_from_delta_with(spec: &DeltaSpec, max_arity: usize, strategy: Strategy) -> Result<BracketSystem> {
    let space = superspace_basis(spec.n_bosons());
    let grading = if spec.selection_rule() { Grading::Integer } else { Grading::Parity };
    let mut system = BracketSystem::new(space, Symmetry::Symmetric, max_arity).with_grading(grading);
    let dim = system.space().dim();
    for n in 0..=max_arity {
        let tuples: Vec<Vec<usize>> = canonical_tuples(dim, n)
            .into_iter()
            .filter(|t| t.windows(2).all(|w| w[0] != w[1] || w[0] >= FERMIONS))
            .collect();
        let values = map_collect(strategy, &tuples, |t| koszul_bracket(spec, t));
        for (t, v) in tuples.iter().zip(values) {
            let v = v?;
            if !v.is_zero() {
                system.insert(t, v)?;
            }
        }
    }
    Ok(system)
}
