use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{koszul_sign, parity, perm_sign, Element, GradedSpace, Permutation, Sign};

pub const DEFAULT_MAX_ARITY: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Graded skew symmetric maps `l_n` of degree `2 - n` (the `V` picture).
    Skew,
    /// Graded symmetric maps `Φⁿ` of degree `+1` (the `W` picture).
    Symmetric,
}

impl Symmetry {
    /// Sign picked up when two adjacent inputs of the given parities swap.
    fn swap_sign(self, a: u8, b: u8) -> Sign {
        let koszul = a * b == 1;
        match self {
            Symmetry::Skew => Sign::from_parity(!koszul),
            Symmetry::Symmetric => Sign::from_parity(koszul),
        }
    }

    fn output_degree(self, arity: usize, input_degrees: i64) -> i64 {
        match self {
            Symmetry::Skew => 2 - arity as i64 + input_degrees,
            Symmetry::Symmetric => 1 + input_degrees,
        }
    }
}

/// How strictly output degrees are checked when entries are inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    /// Full ℤ-degree bookkeeping.
    Integer,
    /// Only the Grassmann parity must match (no degree selection rule).
    Parity,
}

/// Sparse multilinear bracket tables indexed by canonical (sorted) input tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketSystem {
    space: GradedSpace,
    symmetry: Symmetry,
    grading: Grading,
    max_arity: usize,
    tables: BTreeMap<Vec<usize>, Element>,
}

impl BracketSystem {
    pub fn new(space: GradedSpace, symmetry: Symmetry, max_arity: usize) -> Self {
        BracketSystem {
            space,
            symmetry,
            grading: Grading::Integer,
            max_arity,
            tables: BTreeMap::new(),
        }
    }

    pub fn with_grading(mut self, grading: Grading) -> Self {
        self.grading = grading;
        self
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// Stored entries in canonical key order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Element)> {
        self.tables.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    fn check_inputs(&self, inputs: &[usize]) -> Result<()> {
        if inputs.len() > self.max_arity {
            return Err(Error::ArityExceeded { arity: inputs.len(), max_arity: self.max_arity });
        }
        for &i in inputs {
            self.space.generator(i)?;
        }
        Ok(())
    }

    /// Sorts `inputs` into the canonical key and returns the sign relating the
    /// two orderings, or `None` when graded symmetry forces the value to zero.
    pub fn canonicalize(&self, inputs: &[usize]) -> Result<Option<(Vec<usize>, Sign)>> {
        self.check_inputs(inputs)?;
        let sigma = Permutation::argsort(inputs);
        let key = sigma.permute(inputs);
        if key
            .windows(2)
            .any(|w| w[0] == w[1] && self.repeat_vanishes(w[0]))
        {
            return Ok(None);
        }
        let degrees = self.space.degrees(inputs)?;
        let mut sign = koszul_sign(&sigma, &degrees)?;
        if self.symmetry == Symmetry::Skew {
            sign = sign * perm_sign(&sigma);
        }
        Ok(Some((key, sign)))
    }

    fn repeat_vanishes(&self, index: usize) -> bool {
        let p = parity(self.space.generators()[index].degree);
        self.symmetry.swap_sign(p, p).is_minus()
    }

    fn check_degree(&self, arity: usize, input_degree: i64, output: &Element) -> Result<()> {
        let expected = self.symmetry.output_degree(arity, input_degree);
        for (i, _) in output.iter() {
            let g = self.space.generator(i)?;
            let ok = match self.grading {
                Grading::Integer => g.degree == expected,
                Grading::Parity => parity(g.degree) == parity(expected),
            };
            if !ok {
                return Err(Error::DegreeRule(format!(
                    "output {} of arity {arity} bracket has degree {}, expected {expected}",
                    g.name, g.degree
                )));
            }
        }
        Ok(())
    }

    /// Sets the value on `inputs` (any order; the sign is transferred to the
    /// canonical key).
    pub fn insert(&mut self, inputs: &[usize], output: Element) -> Result<()> {
        let canon = self.canonicalize(inputs)?;
        let input_degree: i64 = self.space.degrees(inputs)?.iter().sum();
        self.check_degree(inputs.len(), input_degree, &output)?;
        match canon {
            None if output.is_zero() => Ok(()),
            None => Err(Error::arg(format!(
                "{} is forced to vanish by graded symmetry",
                self.space.format_tuple(inputs)
            ))),
            Some((key, sign)) => {
                let stored = output.signed(sign);
                if stored.is_zero() {
                    self.tables.remove(&key);
                } else {
                    self.tables.insert(key, stored);
                }
                Ok(())
            }
        }
    }

    pub fn eval(&self, inputs: &[usize]) -> Result<Element> {
        Ok(match self.canonicalize(inputs)? {
            None => Element::zero(),
            Some((key, sign)) => match self.tables.get(&key) {
                None => Element::zero(),
                Some(e) => e.signed(sign),
            },
        })
    }

    /// Extends [`eval`](Self::eval) linearly in the first slot.
    pub fn eval_first_linear(&self, first: &Element, rest: &[usize]) -> Result<Element> {
        let mut out = Element::zero();
        let mut inputs = Vec::with_capacity(rest.len() + 1);
        for (g, c) in first.iter() {
            inputs.clear();
            inputs.push(g);
            inputs.extend_from_slice(rest);
            out.add_scaled(&self.eval(&inputs)?, c);
        }
        Ok(out)
    }

    /// Same system with entries above `max_arity` dropped.
    pub fn truncated(&self, max_arity: usize) -> BracketSystem {
        BracketSystem {
            space: self.space.clone(),
            symmetry: self.symmetry,
            grading: self.grading,
            max_arity,
            tables: self
                .tables
                .iter()
                .filter(|(k, _)| k.len() <= max_arity)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// First canonical key (up to `max_arity`) on which the two systems differ.
    pub fn first_difference(&self, other: &BracketSystem, max_arity: usize) -> Option<(Vec<usize>, Element, Element)> {
        let keys: std::collections::BTreeSet<&Vec<usize>> = self
            .tables
            .keys()
            .chain(other.tables.keys())
            .filter(|k| k.len() <= max_arity)
            .collect();
        keys.into_iter().find_map(|k| {
            let a = self.tables.get(k).cloned().unwrap_or_default();
            let b = other.tables.get(k).cloned().unwrap_or_default();
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

/// Non-decreasing index tuples of length `n` over `0..dim`, in lexicographic
/// order.
pub fn canonical_tuples(dim: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, dim: usize, n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for g in start..dim {
            acc.push(g);
            rec(g, dim, n, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, dim, n, &mut Vec::with_capacity(n), &mut out);
    out
}
