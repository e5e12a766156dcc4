//! Built-in systems: the Lada–Daily algebra with one boson and the Daily
//! family whose operator form is governed by the Lambert function.

mod coeffs;

use num_traits::Zero;

pub use coeffs::{b_closed, c1_closed, c1_recursive, c2_daily, normalize_scaling, CoeffKind, CoeffSequence};

use crate::error::{Error, Result};
use crate::graded::{Element, Generator, GradedSpace};
use crate::linf::{canonical_tuples, BracketSystem, Symmetry, DEFAULT_MAX_ARITY};
use crate::rational::{factorial, neg_one_pow, rat, Rational};
use crate::series::{Series, DEFAULT_SERIES_ORDER};
use crate::superspace::{DeltaSpec, GenFn};

/// One example in all three forms: skew brackets on `V`, symmetric brackets on
/// `W = ↓V`, and (when the two-fermion frame applies) the `Δ` data.
#[derive(Debug, Clone)]
pub struct ExampleSystems {
    pub v: BracketSystem,
    pub w: BracketSystem,
    pub delta: Option<DeltaSpec>,
}

fn w_space(dim0: usize, dim1: usize) -> GradedSpace {
    let mut gens: Vec<Generator> = (1..=dim0).map(|i| Generator::new(format!("theta{i}"), -1)).collect();
    if dim1 == 1 {
        gens.push(Generator::new("x", 0));
    } else {
        gens.extend((1..=dim1).map(|i| Generator::new(format!("x{i}"), 0)));
    }
    GradedSpace::new("W", gens).expect("distinct names")
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// `b_{2m}`: the bracket coefficients of `Φ^{m+1}(θ₂ ⊗ x^{⊗m})`.
fn example1_b2(m: usize) -> Rational {
    match m {
        0 => rat(1),
        1 => rat(0),
        _ => -neg_one_pow(m as i64) * fact(m - 2),
    }
}

pub fn example1_system() -> ExampleSystems {
    example1_system_with(DEFAULT_MAX_ARITY, DEFAULT_SERIES_ORDER)
}

/// First example with brackets through `max_arity` and generating functions
/// known through `p^order`.
pub fn example1_system_with(max_arity: usize, order: usize) -> ExampleSystems {
    let v_space = GradedSpace::new(
        "V",
        vec![Generator::new("v1", 0), Generator::new("v2", 0), Generator::new("w", 1)],
    )
    .expect("distinct names");
    let (v1, v2, w) = (0, 1, 2);
    let mut v = BracketSystem::new(v_space, Symmetry::Skew, max_arity);
    let put = |sys: &mut BracketSystem, inputs: &[usize], out: Element| {
        if inputs.len() <= max_arity {
            sys.insert(inputs, out).expect("well-formed example entry");
        }
    };
    put(&mut v, &[v1], Element::basis(w));
    put(&mut v, &[v2], Element::basis(w));
    put(&mut v, &[v1, v2], Element::basis(v1));
    put(&mut v, &[v1, w], Element::basis(w));
    for n in 3..=max_arity {
        let mut inputs = vec![v2];
        inputs.extend(std::iter::repeat_n(w, n - 1));
        put(&mut v, &inputs, Element::term(w, c1_closed(n).expect("n ≥ 3")));
    }

    let (t1, t2, x) = (0, 1, 2);
    let mut ws = BracketSystem::new(w_space(2, 1), Symmetry::Symmetric, max_arity);
    put(&mut ws, &[t1], Element::basis(x));
    put(&mut ws, &[t1, t2], Element::basis(t1));
    put(&mut ws, &[t1, x], Element::basis(x));
    for m in 0..max_arity {
        let mut inputs = vec![t2];
        inputs.extend(std::iter::repeat_n(x, m));
        put(&mut ws, &inputs, Element::term(x, example1_b2(m)));
    }

    let one = |s: Series| GenFn::radial(s, 1);
    let f1 = one(Series::from_ints(&[-1], order));
    let g1 = one(Series::from_ints(&[1, 1], order));
    let g2 = one(Series::from_fn(order, |m| example1_b2(m) / fact(m)));
    let zero = || GenFn::zero(1, order);
    let delta = DeltaSpec::new(1, [f1, zero()], [vec![g1], vec![g2]], [zero(), zero()])
        .expect("consistent dimensions")
        .with_selection_rule();

    ExampleSystems { v, w: ws, delta: Some(delta) }
}

pub fn example2_system(dim0: usize, dim1: usize, n_bosons: usize) -> Result<ExampleSystems> {
    example2_system_with(dim0, dim1, n_bosons, DEFAULT_MAX_ARITY, DEFAULT_SERIES_ORDER)
}

/// Second example on `V₀ = ⟨v_1..v_dim0⟩`, `V₁ = ⟨w_1..w_dim1⟩`. The `Δ` data
/// (over `n_bosons` bosons) exists only in the two-fermion frame `dim0 = 2`.
pub fn example2_system_with(
    dim0: usize,
    dim1: usize,
    n_bosons: usize,
    max_arity: usize,
    order: usize,
) -> Result<ExampleSystems> {
    if dim0 == 0 {
        return Err(Error::arg("dim V₀ must be positive"));
    }
    if dim1 < dim0 {
        return Err(Error::arg(format!("dim V₁ = {dim1} must be at least dim V₀ = {dim0}")));
    }
    let mut gens: Vec<Generator> = (1..=dim0).map(|i| Generator::new(format!("v{i}"), 0)).collect();
    gens.extend((1..=dim1).map(|i| Generator::new(format!("w{i}"), 1)));
    let v_space = GradedSpace::new("V", gens)?;

    let mut v = BracketSystem::new(v_space, Symmetry::Skew, max_arity);
    let mut ws = BracketSystem::new(w_space(dim0, dim1), Symmetry::Symmetric, max_arity);
    let odd = |j: usize| dim0 + j;
    let daily: Vec<Rational> = if max_arity >= 3 {
        CoeffSequence::generate(CoeffKind::Example2Daily, max_arity)?.values.into_values().collect()
    } else {
        Vec::new()
    };
    for i in 0..dim0 {
        if max_arity >= 1 {
            v.insert(&[i], Element::basis(odd(i)))?;
            ws.insert(&[i], Element::basis(odd(i)))?;
        }
        if max_arity >= 2 {
            for j in 0..dim1 {
                let out = Element::from_terms([(odd(i), rat(1)), (odd(j), rat(1))]);
                v.insert(&[i, odd(j)], out.clone())?;
                ws.insert(&[i, odd(j)], out)?;
            }
        }
        for n in 3..=max_arity {
            let c = &daily[n - 3];
            let b = b_closed(n - 1);
            for tail in canonical_tuples(dim1, n - 1) {
                let mut inputs = vec![i];
                inputs.extend(tail.iter().map(|&j| odd(j)));
                v.insert(&inputs, Element::term(odd(i), c.clone()))?;
                ws.insert(&inputs, Element::term(odd(i), b.clone()))?;
            }
        }
    }

    let delta = if dim0 == 2 { Some(example2_delta(n_bosons, order)?) } else { None };
    Ok(ExampleSystems { v, w: ws, delta })
}

/// `f = h = 0`, `g^i_α = δ^i_α G(P) + p^i` with `G(P) = Σ B_M P^M / M!`.
fn example2_delta(n_bosons: usize, order: usize) -> Result<DeltaSpec> {
    if n_bosons < 2 {
        return Err(Error::arg("the two-fermion frame needs at least two bosons"));
    }
    let big_g = Series::from_fn(order, |m| b_closed(m) / fact(m));
    let g = |alpha: usize| -> Vec<GenFn> {
        (0..n_bosons)
            .map(|i| {
                let radial = if i == alpha { big_g.clone() } else { Series::zero(order) };
                let linear = (0..n_bosons).map(|j| if j == i { rat(1) } else { Rational::zero() }).collect();
                GenFn::with_linear(radial, linear)
            })
            .collect()
    };
    let zero = || GenFn::zero(n_bosons, order);
    Ok(DeltaSpec::new(n_bosons, [zero(), zero()], [g(0), g(1)], [zero(), zero()])?.with_selection_rule())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::superspace_basis;

    #[test]
    fn example1_entries() {
        let ex = example1_system_with(6, 8);
        assert_eq!(ex.w.eval(&[0]).unwrap(), Element::basis(2));
        assert!(ex.w.eval(&[1, 2]).unwrap().is_zero());
        assert_eq!(ex.w.eval(&[1, 2, 2, 2]).unwrap(), Element::term(2, rat(1)));
        let g2 = ex.delta.unwrap().g(1, 0).coeff(&[3]).unwrap();
        assert_eq!(g2 * fact(3), rat(1));
    }

    #[test]
    fn example2_entries() {
        let ex = example2_system_with(3, 3, 3, 5, 8).unwrap();
        assert!(ex.delta.is_none());
        assert_eq!(ex.v.eval(&[0, 3, 4]).unwrap(), Element::term(3, rat(1)));
        assert_eq!(ex.w.eval(&[1, 3, 4, 5]).unwrap(), Element::term(4, rat(4)));
        assert!(example2_system(3, 2, 3).is_err());
        let ex = example2_system_with(2, 3, 3, 4, 8).unwrap();
        assert!(ex.w.space().same_shape(&superspace_basis(3)));
        let d = ex.delta.unwrap();
        assert_eq!(d.g(0, 0).coeff(&[0, 0, 0]).unwrap(), rat(1));
        assert_eq!(d.g(0, 1).coeff(&[0, 0, 0]).unwrap(), rat(0));
    }
}
