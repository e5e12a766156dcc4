use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::{parity, Sign};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A named basis vector of a graded space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        Generator { name: name.into(), degree }
    }

    pub fn parity(&self) -> u8 {
        parity(self.degree)
    }
}

/// Finite-dimensional graded space with a fixed, ordered basis. The basis order
/// is the total order used for canonical bracket keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    label: String,
    generators: Vec<Generator>,
}

impl GradedSpace {
    pub fn new(label: impl Into<String>, generators: Vec<Generator>) -> Result<Self> {
        let mut names = std::collections::HashSet::new();
        for g in &generators {
            if g.name.is_empty() || !names.insert(g.name.as_str()) {
                return Err(Error::arg(format!("duplicate or empty generator name {:?}", g.name)));
            }
        }
        Ok(GradedSpace { label: label.into(), generators })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, index: usize) -> Result<&Generator> {
        self.generators
            .get(index)
            .ok_or(Error::ForeignGenerator { index, dim: self.dim() })
    }

    pub fn degree(&self, index: usize) -> Result<i64> {
        Ok(self.generator(index)?.degree)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degrees(&self, indices: &[usize]) -> Result<Vec<i64>> {
        indices.iter().map(|&i| self.degree(i)).collect()
    }

    /// Same basis with every degree shifted by `shift`.
    pub fn shifted(&self, label: impl Into<String>, shift: i64, rename: impl Fn(&str) -> String) -> GradedSpace {
        GradedSpace {
            label: label.into(),
            generators: self
                .generators
                .iter()
                .map(|g| Generator::new(rename(&g.name), g.degree + shift))
                .collect(),
        }
    }

    /// Same dimension and degrees, names ignored.
    pub fn same_shape(&self, other: &GradedSpace) -> bool {
        self.dim() == other.dim()
            && self.generators.iter().zip(&other.generators).all(|(a, b)| a.degree == b.degree)
    }

    pub fn format_tuple(&self, indices: &[usize]) -> String {
        let names: Vec<&str> = indices
            .iter()
            .map(|&i| self.generators.get(i).map_or("?", |g| g.name.as_str()))
            .collect();
        format!("({})", names.join(", "))
    }
}

/// Finite linear combination of basis vectors (by index) with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<usize, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(index: usize) -> Self {
        Element::term(index, Rational::one())
    }

    pub fn term(index: usize, coeff: Rational) -> Self {
        let mut e = Element::zero();
        e.add_term(index, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn add_term(&mut self, index: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (&i, c) in &other.terms {
            self.add_term(i, c * factor);
        }
    }

    pub fn add_element(&mut self, other: &Element) {
        for (&i, c) in &other.terms {
            self.add_term(i, c.clone());
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Element {
        let mut e = Element::zero();
        e.add_scaled(self, factor);
        e
    }

    pub fn signed(&self, sign: Sign) -> Element {
        match sign {
            Sign::Plus => self.clone(),
            Sign::Minus => Element {
                terms: self.terms.iter().map(|(&i, c)| (i, -c)).collect(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.terms.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// e.g. `2 x1 - 1/2 theta2`.
    pub fn display(&self, space: &GradedSpace) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.iter().enumerate() {
            let name = space.generators().get(i).map_or("?", |g| g.name.as_str());
            let mag = c.abs();
            let sep = match (k, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            if mag.is_one() {
                out.push_str(name);
            } else {
                let _ = write!(out, "{} {}", rational::display(&mag), name);
            }
        }
        out
    }
}
