use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::FERMIONS;
use crate::graded::Sign;
use crate::rational::{self, Rational};

/// `θ^A x^m`: a subset `A ⊆ {θ₁, θ₂}` (bit `α` set when `θ_{α+1}` is present,
/// written in increasing order) times a boson multi-index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    fermions: u8,
    bosons: Vec<u32>,
}

impl SuperMonomial {
    pub fn one(n_bosons: usize) -> Self {
        SuperMonomial { fermions: 0, bosons: vec![0; n_bosons] }
    }

    /// `fermions` lists 0-based θ indices; repeated entries give `None`
    /// (`θ_α² = 0`). The sign is that of reordering them increasingly.
    pub fn new(fermions: &[usize], bosons: Vec<u32>) -> Option<(Sign, Self)> {
        let mut mono = SuperMonomial { fermions: 0, bosons };
        let mut sign = Sign::Plus;
        for &a in fermions.iter().rev() {
            let (s, m) = mono.theta_mul(a)?;
            sign = sign * s;
            mono = m;
        }
        Some((sign, mono))
    }

    pub fn fermion_mask(&self) -> u8 {
        self.fermions
    }

    pub fn has_theta(&self, alpha: usize) -> bool {
        self.fermions & (1 << alpha) != 0
    }

    pub fn fermion_count(&self) -> usize {
        self.fermions.count_ones() as usize
    }

    pub fn bosons(&self) -> &[u32] {
        &self.bosons
    }

    pub fn boson_degree(&self) -> usize {
        self.bosons.iter().map(|&m| m as usize).sum()
    }

    /// Number of generator factors (fermions plus bosons with multiplicity).
    pub fn total_degree(&self) -> usize {
        self.fermion_count() + self.boson_degree()
    }

    pub fn parity(&self) -> u8 {
        (self.fermion_count() % 2) as u8
    }

    fn thetas_below(&self, alpha: usize) -> usize {
        (self.fermions & ((1u8 << alpha) - 1)).count_ones() as usize
    }

    /// `θ_α · self`.
    pub fn theta_mul(&self, alpha: usize) -> Option<(Sign, SuperMonomial)> {
        assert!(alpha < FERMIONS);
        if self.has_theta(alpha) {
            return None;
        }
        let sign = Sign::from_parity(self.thetas_below(alpha) % 2 == 1);
        Some((sign, SuperMonomial { fermions: self.fermions | (1 << alpha), bosons: self.bosons.clone() }))
    }

    /// Left derivative `∂/∂θ_α` of `self`.
    pub fn theta_derivative(&self, alpha: usize) -> Option<(Sign, SuperMonomial)> {
        assert!(alpha < FERMIONS);
        if !self.has_theta(alpha) {
            return None;
        }
        let sign = Sign::from_parity(self.thetas_below(alpha) % 2 == 1);
        Some((sign, SuperMonomial { fermions: self.fermions & !(1 << alpha), bosons: self.bosons.clone() }))
    }

    pub fn with_bosons(&self, bosons: Vec<u32>) -> SuperMonomial {
        SuperMonomial { fermions: self.fermions, bosons }
    }

    /// Super-commutative product with the sign of moving `other`'s fermions
    /// into place.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(Sign, SuperMonomial)> {
        if self.fermions & other.fermions != 0 {
            return None;
        }
        let mut swaps = 0;
        for a in 0..FERMIONS {
            if self.has_theta(a) {
                swaps += (0..a).filter(|&b| other.has_theta(b)).count();
            }
        }
        let bosons = self.bosons.iter().zip(&other.bosons).map(|(a, b)| a + b).collect();
        Some((Sign::from_parity(swaps % 2 == 1), SuperMonomial { fermions: self.fermions | other.fermions, bosons }))
    }

    /// The single W generator this monomial is, if it is one: `θ_α ↦ α`,
    /// `x_i ↦ 2 + i`.
    pub fn as_generator(&self) -> Option<usize> {
        match (self.fermion_count(), self.boson_degree()) {
            (1, 0) => (0..FERMIONS).find(|&a| self.has_theta(a)),
            (0, 1) => self.bosons.iter().position(|&m| m == 1).map(|i| FERMIONS + i),
            _ => None,
        }
    }

    pub fn generator(n_bosons: usize, index: usize) -> SuperMonomial {
        let mut m = SuperMonomial::one(n_bosons);
        if index < FERMIONS {
            m.fermions = 1 << index;
        } else {
            m.bosons[index - FERMIONS] = 1;
        }
        m
    }

    pub fn name(&self) -> String {
        let mut out = String::new();
        for a in 0..FERMIONS {
            if self.has_theta(a) {
                let _ = write!(out, "θ{}", a + 1);
            }
        }
        let single = self.bosons.len() == 1;
        for (i, &m) in self.bosons.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if single {
                out.push('x');
            } else {
                let _ = write!(out, "x{}", i + 1);
            }
            if m > 1 {
                let _ = write!(out, "^{m}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.fermions.cmp(&other.fermions))
            .then_with(|| other.bosons.cmp(&self.bosons))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the super-symmetric algebra with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPoly {
    n_bosons: usize,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPoly {
    pub fn zero(n_bosons: usize) -> Self {
        SuperPoly { n_bosons, terms: BTreeMap::new() }
    }

    pub fn one(n_bosons: usize) -> Self {
        SuperPoly::monomial(SuperMonomial::one(n_bosons), Rational::one())
    }

    pub fn monomial(m: SuperMonomial, coeff: Rational) -> Self {
        let mut p = SuperPoly::zero(m.bosons.len());
        p.add_term(m, coeff);
        p
    }

    pub fn generator(n_bosons: usize, index: usize) -> Self {
        SuperPoly::monomial(SuperMonomial::generator(n_bosons, index), Rational::one())
    }

    pub fn n_bosons(&self) -> usize {
        self.n_bosons
    }

    pub fn add_term(&mut self, m: SuperMonomial, coeff: Rational) {
        debug_assert_eq!(m.bosons.len(), self.n_bosons);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_signed(&mut self, sign: Sign, m: SuperMonomial, coeff: Rational) {
        self.add_term(m, sign.apply(coeff));
    }

    pub fn add_scaled(&mut self, other: &SuperPoly, factor: &Rational) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SuperPoly {
        let mut out = SuperPoly::zero(self.n_bosons);
        out.add_scaled(self, factor);
        out
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

    pub fn iter(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero(self.n_bosons);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((s, m)) = a.mul(b) {
                    out.add_signed(s, m, ca * cb);
                }
            }
        }
        out
    }

    /// Left multiplication `L_z` by the W generator with the given index.
    pub fn left_mul_generator(&self, index: usize) -> SuperPoly {
        SuperPoly::generator(self.n_bosons, index).mul(self)
    }

    pub fn theta_derivative(&self, alpha: usize) -> SuperPoly {
        let mut out = SuperPoly::zero(self.n_bosons);
        for (m, c) in &self.terms {
            if let Some((s, d)) = m.theta_derivative(alpha) {
                out.add_signed(s, d, c.clone());
            }
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sep = match (k, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            let mag = c.abs();
            let name = m.name();
            if !mag.is_one() || name == "1" {
                out.push_str(&rational::display(&mag));
                if name != "1" {
                    out.push(' ');
                }
            }
            if name != "1" {
                out.push_str(&name);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn thetas_anticommute() {
        let t1 = SuperPoly::generator(1, 0);
        let t2 = SuperPoly::generator(1, 1);
        let a = t1.mul(&t2);
        let b = t2.mul(&t1);
        assert_eq!(a, b.scaled(&rat(-1)));
        assert!(t1.mul(&t1).is_zero());
        let x = SuperPoly::generator(1, 2);
        assert_eq!(x.mul(&t1), t1.mul(&x));
    }

    #[test]
    fn left_derivative_signs() {
        let (s, t1t2) = SuperMonomial::new(&[0, 1], vec![0]).unwrap();
        assert_eq!(s, Sign::Plus);
        let p = SuperPoly::monomial(t1t2, rat(1));
        // ∂_{θ2}(θ1 θ2) = -θ1,  ∂_{θ1}(θ1 θ2) = θ2
        assert_eq!(p.theta_derivative(1), SuperPoly::generator(1, 0).scaled(&rat(-1)));
        assert_eq!(p.theta_derivative(0), SuperPoly::generator(1, 1));
        assert_eq!(p.theta_derivative(1).theta_derivative(0), SuperPoly::one(1).scaled(&rat(-1)));
        assert!(SuperMonomial::new(&[1, 1], vec![0]).is_none());
        assert_eq!(SuperMonomial::new(&[1, 0], vec![0]).unwrap().0, Sign::Minus);
    }

    #[test]
    fn generator_round_trip() {
        for idx in 0..5 {
            assert_eq!(SuperMonomial::generator(3, idx).as_generator(), Some(idx));
        }
        assert_eq!(SuperMonomial::one(3).as_generator(), None);
    }

    #[test]
    fn names() {
        let (_, m) = SuperMonomial::new(&[0], vec![2]).unwrap();
        assert_eq!(m.name(), "θ1x^2");
        let (_, m) = SuperMonomial::new(&[], vec![1, 0, 3]).unwrap();
        assert_eq!(m.name(), "x1x3^3");
    }
}
