use super::desuspend::suspend_system;
use super::system::{canonical_tuples, BracketSystem, Symmetry};
use crate::error::{Error, Result};
use crate::exec::{map_collect, Strategy};
use crate::graded::{koszul_sign, perm_sign, unshuffles, Element, GradedSpace};
use crate::rational::neg_one_pow;

/// Per-split partial sums of the generalized Jacobi expression.
///
/// Entry `i - 1` holds `Σ_σ e(σ)(-1)^σ l_j(l_i(v_σ(1..i)), v_σ(i+1..n))` over
/// the `(i, n - i)` unshuffles, with `j = n + 1 - i`, before the
/// `(-1)^{i(j-1)}` weight is applied.
pub fn jacobi_terms(sys: &BracketSystem, inputs: &[usize]) -> Result<Vec<Element>> {
    if sys.symmetry() != Symmetry::Skew {
        return Err(Error::arg("the generalized Jacobi expression is defined for skew systems"));
    }
    let n = inputs.len();
    if n > sys.max_arity() {
        return Err(Error::ArityExceeded { arity: n, max_arity: sys.max_arity() });
    }
    let degrees = sys.space().degrees(inputs)?;
    let mut terms = Vec::with_capacity(n);
    for i in 1..=n {
        let mut partial = Element::zero();
        for sigma in unshuffles(i, n)? {
            let permuted = sigma.permute(inputs);
            let inner = sys.eval(&permuted[..i])?;
            if inner.is_zero() {
                continue;
            }
            let sign = koszul_sign(&sigma, &degrees)? * perm_sign(&sigma);
            let outer = sys.eval_first_linear(&inner, &permuted[i..])?;
            partial.add_element(&outer.signed(sign));
        }
        terms.push(partial);
    }
    Ok(terms)
}

/// Left-hand side of the `n`-th generalized Jacobi identity on `inputs`
/// (`n = inputs.len()`).
pub fn jacobi_defect(sys: &BracketSystem, inputs: &[usize]) -> Result<Element> {
    let n = inputs.len() as i64;
    let mut defect = Element::zero();
    for (k, partial) in jacobi_terms(sys, inputs)?.iter().enumerate() {
        let i = k as i64 + 1;
        let j = n + 1 - i;
        defect.add_scaled(partial, &neg_one_pow(i * (j - 1)));
    }
    Ok(defect)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: Vec<usize>,
    pub defect: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArityReport {
    pub arity: usize,
    pub tuples_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl ArityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    /// Space of the skew system that was checked (the suspension, when a
    /// symmetric system was given).
    pub space: GradedSpace,
    pub arities: Vec<ArityReport>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.arities.iter().all(ArityReport::passed)
    }

    pub fn first_failure(&self) -> Option<&ArityReport> {
        self.arities.iter().find(|a| !a.passed())
    }
}

pub fn verify_jacobi(sys: &BracketSystem, n_max: usize) -> Result<JacobiReport> {
    verify_jacobi_with(sys, n_max, Strategy::default())
}

/// Checks every identity of arity `1..=n_max` on all canonically ordered basis
/// tuples. Symmetric systems are suspended to their skew form first.
pub fn verify_jacobi_with(sys: &BracketSystem, n_max: usize, strategy: Strategy) -> Result<JacobiReport> {
    let suspended;
    let sys = match sys.symmetry() {
        Symmetry::Skew => sys,
        Symmetry::Symmetric => {
            suspended = suspend_system(sys)?;
            &suspended
        }
    };
    if n_max > sys.max_arity() {
        return Err(Error::ArityExceeded { arity: n_max, max_arity: sys.max_arity() });
    }
    let mut arities = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let tuples = canonical_tuples(sys.space().dim(), n);
        let defects = map_collect(strategy, &tuples, |t| jacobi_defect(sys, t));
        let mut counterexample = None;
        for (t, d) in tuples.iter().zip(defects) {
            let d = d?;
            if !d.is_zero() {
                counterexample = Some(Counterexample { inputs: t.clone(), defect: d });
                break;
            }
        }
        arities.push(ArityReport { arity: n, tuples_checked: tuples.len(), counterexample });
    }
    Ok(JacobiReport { space: sys.space().clone(), arities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Generator;
    use crate::rational::rat;

    fn space() -> GradedSpace {
        GradedSpace::new("V", vec![Generator::new("a", 0), Generator::new("b", 1)]).unwrap()
    }

    #[test]
    fn zero_system_passes() {
        let sys = BracketSystem::new(space(), Symmetry::Skew, 5);
        let report = verify_jacobi(&sys, 5).unwrap();
        assert!(report.passed());
        assert_eq!(report.arities.len(), 5);
    }

    #[test]
    fn arity_one_defect_is_differential_squared() {
        // l_1(a) = b, l_1(b) = 0: a complex, passes.
        let mut sys = BracketSystem::new(space(), Symmetry::Skew, 3);
        sys.insert(&[0], Element::basis(1)).unwrap();
        assert!(jacobi_defect(&sys, &[0]).unwrap().is_zero());
        // Degree-2 space with l_1 a -> b -> c, l_1∘l_1 ≠ 0.
        let sp = GradedSpace::new(
            "V",
            vec![Generator::new("a", 0), Generator::new("b", 1), Generator::new("c", 2)],
        )
        .unwrap();
        let mut sys = BracketSystem::new(sp, Symmetry::Skew, 2);
        sys.insert(&[0], Element::basis(1)).unwrap();
        sys.insert(&[1], Element::term(2, rat(3))).unwrap();
        assert_eq!(jacobi_defect(&sys, &[0]).unwrap(), Element::term(2, rat(3)));
        let report = verify_jacobi(&sys, 2).unwrap();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().arity, 1);
    }

    #[test]
    fn rejects_n_max_above_max_arity() {
        let sys = BracketSystem::new(space(), Symmetry::Skew, 2);
        assert!(verify_jacobi(&sys, 3).is_err());
    }
}
