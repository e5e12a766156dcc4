use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::delta::{apply_delta, DeltaSpec, GenFn, EPS_LOWER, EPS_UPPER};
use super::poly::{SuperMonomial, SuperPoly};
use super::FERMIONS;
use crate::error::{Error, Result};
use crate::exec::{map_collect, Strategy};
use crate::rational::{rat, Rational};
use crate::series::Series;

/// Outcome of checking `Δ²(m) = 0` on every monomial `m` of total degree at
/// most `degree_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCheckReport {
    pub degree_bound: usize,
    pub monomials_checked: usize,
    /// First monomial (in degree order) with `Δ²(m) ≠ 0`, and that value.
    pub witness: Option<(SuperMonomial, SuperPoly)>,
}

impl DeltaCheckReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// All monomials `θ^A x^m` with `|A| + |m| ≤ degree`, in increasing order.
fn monomials_up_to(n_bosons: usize, degree: usize) -> Vec<SuperMonomial> {
    fn bosons(n: usize, budget: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for k in 0..=budget {
            acc.push(k as u32);
            bosons(n, budget - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for mask in 0..(1usize << FERMIONS) {
        let thetas: Vec<usize> = (0..FERMIONS).filter(|a| mask & (1 << a) != 0).collect();
        let Some(budget) = degree.checked_sub(thetas.len()) else { continue };
        let mut all = Vec::new();
        bosons(n_bosons, budget, &mut Vec::new(), &mut all);
        for b in all {
            let (_, m) = SuperMonomial::new(&thetas, b).expect("distinct thetas");
            out.push(m);
        }
    }
    out.sort();
    out
}

pub fn delta_squared_check(spec: &DeltaSpec, degree: usize) -> Result<DeltaCheckReport> {
    delta_squared_check_with(spec, degree, Strategy::default())
}

/// Checks `Δ² = 0` on all monomials up to `degree`. Needs every generating
/// function known through `p^degree`.
pub fn delta_squared_check_with(spec: &DeltaSpec, degree: usize, strategy: Strategy) -> Result<DeltaCheckReport> {
    if spec.order() < degree as i64 {
        return Err(Error::Truncated { needed: degree, known: spec.order() });
    }
    let monomials = monomials_up_to(spec.n_bosons(), degree);
    let results = map_collect(strategy, &monomials, |m| {
        let once = apply_delta(spec, &SuperPoly::monomial(m.clone(), Rational::one()))?;
        apply_delta(spec, &once)
    });
    let mut witness = None;
    for (m, r) in monomials.iter().zip(results) {
        let r = r?;
        if !r.is_zero() {
            witness = Some((m.clone(), r));
            break;
        }
    }
    Ok(DeltaCheckReport { degree_bound: degree, monomials_checked: monomials.len(), witness })
}

/// Polynomial in the momenta `p¹..p^N`, stored in the coordinates
/// `P = p¹ + .. + p^N`, `q_k = p^k` (`k ≥ 2`) as a map from `q`-exponents to
/// series in `P`. The change of coordinates is homogeneous, so total degree is
/// preserved.
///
/// Terms whose series vanish are kept: their precision still matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentumPoly {
    n_bosons: usize,
    terms: BTreeMap<Vec<u32>, Series>,
}

impl MomentumPoly {
    pub fn zero(n_bosons: usize) -> Self {
        MomentumPoly { n_bosons, terms: BTreeMap::new() }
    }

    fn unit_q(&self, k: usize) -> Vec<u32> {
        let mut e = vec![0; self.n_bosons - 1];
        e[k] = 1;
        e
    }

    fn add_series(&mut self, q: Vec<u32>, s: Series) {
        match self.terms.get_mut(&q) {
            Some(t) => *t = &*t + &s,
            None => {
                self.terms.insert(q, s);
            }
        }
    }

    pub fn from_genfn(g: &GenFn) -> Self {
        let n = g.n_bosons();
        let order = g.order().max(0) as usize;
        let mut out = MomentumPoly::zero(n);
        out.add_series(vec![0; n - 1], g.radial_part().clone());
        for (j, l) in g.linear_part().iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            if j == 0 {
                // p¹ = P - Σ q_k
                out.add_series(vec![0; n - 1], Series::variable(order).scale(l));
                for k in 0..n - 1 {
                    let q = out.unit_q(k);
                    out.add_series(q, Series::constant(-l.clone(), order));
                }
            } else {
                let q = out.unit_q(j - 1);
                out.add_series(q, Series::constant(l.clone(), order));
            }
        }
        out
    }

    pub fn add(&self, other: &MomentumPoly) -> MomentumPoly {
        let mut out = self.clone();
        for (q, s) in &other.terms {
            out.add_series(q.clone(), s.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MomentumPoly {
        MomentumPoly {
            n_bosons: self.n_bosons,
            terms: self.terms.iter().map(|(q, s)| (q.clone(), s.scale(c))).collect(),
        }
    }

    pub fn mul(&self, other: &MomentumPoly) -> MomentumPoly {
        let mut out = MomentumPoly::zero(self.n_bosons);
        for (qa, sa) in &self.terms {
            for (qb, sb) in &other.terms {
                let q = qa.iter().zip(qb).map(|(a, b)| a + b).collect();
                out.add_series(q, sa * sb);
            }
        }
        out
    }

    /// `∂/∂p^i` (0-based `i`).
    pub fn partial(&self, i: usize) -> MomentumPoly {
        let mut out = MomentumPoly::zero(self.n_bosons);
        for (q, s) in &self.terms {
            out.add_series(q.clone(), s.derivative());
            if i > 0 && q[i - 1] > 0 {
                let mut lower = q.clone();
                lower[i - 1] -= 1;
                out.add_series(lower, s.scale(&rat(i64::from(q[i - 1]))));
            }
        }
        out
    }

    /// Lowest-degree nonzero coefficient among total degrees `≤ t`, as
    /// `(q-exponent, power of P, coefficient)`. Fails if some needed
    /// coefficient is beyond the known precision.
    pub fn first_nonzero_through(&self, t: usize) -> Result<Option<(Vec<u32>, usize, Rational)>> {
        let mut best: Option<(usize, Vec<u32>, usize, Rational)> = None;
        for (q, s) in &self.terms {
            let qdeg: usize = q.iter().map(|&a| a as usize).sum();
            let Some(need) = t.checked_sub(qdeg) else { continue };
            if s.order() < need as i64 {
                return Err(Error::Truncated { needed: need, known: s.order() });
            }
            if let Some((k, c)) = s.coeffs()[..=need].iter().enumerate().find(|(_, c)| !c.is_zero()) {
                let total = qdeg + k;
                if best.as_ref().is_none_or(|b| total < b.0) {
                    best = Some((total, q.clone(), k, c.clone()));
                }
            }
        }
        Ok(best.map(|(_, q, k, c)| (q, k, c)))
    }

    pub fn vanishes_through(&self, t: usize) -> Result<bool> {
        Ok(self.first_nonzero_through(t)?.is_none())
    }

    /// Highest total degree through which every coefficient is known, `None`
    /// when the polynomial is exact.
    pub fn known_through(&self) -> Option<i64> {
        self.terms
            .iter()
            .map(|(q, s)| s.order() + q.iter().map(|&a| i64::from(a)).sum::<i64>())
            .min()
    }

    /// The series multiplying `q^exponent`, if present.
    pub fn series(&self, q: &[u32]) -> Option<&Series> {
        self.terms.get(q)
    }
}

/// Nonzero terms only, e.g. `(2 p + O(p^5)) p2 p3^2`; the series variable
/// stands for the total momentum.
impl fmt::Display for MomentumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, s) in self.terms.iter().filter(|(_, s)| !s.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({s})")?;
            for (k, a) in q.iter().enumerate().filter(|(_, a)| **a > 0) {
                write!(f, " p{}", k + 2)?;
                if *a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A coefficient that violates one of the nilpotency conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualWitness {
    /// Which residual, e.g. `first[0]` or `second[1][0]`.
    pub condition: String,
    pub total_degree: usize,
    pub q_exponent: Vec<u32>,
    pub p_power: usize,
    pub coefficient: Rational,
}

impl fmt::Display for ResidualWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} has coefficient {} on P^{}", self.condition, self.coefficient, self.p_power)?;
        for (k, a) in self.q_exponent.iter().enumerate() {
            if *a > 0 {
                write!(f, " p{}^{a}", k + 2)?;
            }
        }
        write!(f, " (total degree {})", self.total_degree)
    }
}

/// The three families of generating-function identities equivalent to
/// `Δ² = 0`:
///
/// * `first[i]  = Σ_γ g^i_γ f^γ + ε^{αβ} ∂_j g^i_α g^j_β`
/// * `second[α][β] = f^α h^γ ε_{γβ} + ∂_i h^α g^i_β`
/// * `third[i]  = g^i_α h^α`
///
/// `Δ²` annihilates all monomials of total degree `≤ d` exactly when `first`
/// vanishes through degree `d - 2`, `second` through `d - 1` and `third`
/// through `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyResiduals {
    pub first: Vec<MomentumPoly>,
    pub second: [[MomentumPoly; 2]; 2],
    pub third: Vec<MomentumPoly>,
}

impl NilpotencyResiduals {
    /// Every residual with its label and degree offset: for monomials up to
    /// degree `d` it must vanish through degree `d + offset`.
    pub fn entries(&self) -> Vec<(String, &MomentumPoly, i64)> {
        let mut out = Vec::new();
        for (i, r) in self.first.iter().enumerate() {
            out.push((format!("first[{i}]"), r, -2));
        }
        for (a, row) in self.second.iter().enumerate() {
            for (b, r) in row.iter().enumerate() {
                out.push((format!("second[{a}][{b}]"), r, -1));
            }
        }
        for (i, r) in self.third.iter().enumerate() {
            out.push((format!("third[{i}]"), r, 0));
        }
        out
    }

    /// Lowest-degree violation relevant to monomials of total degree `≤ d`.
    pub fn witness_for_degree(&self, d: usize) -> Result<Option<ResidualWitness>> {
        // Ranked by the smallest monomial degree at which Δ² would fail.
        let mut best: Option<(i64, ResidualWitness)> = None;
        for (condition, r, offset) in self.entries() {
            let Ok(t) = usize::try_from(d as i64 + offset) else { continue };
            if let Some((q, k, c)) = r.first_nonzero_through(t)? {
                let total_degree = k + q.iter().map(|&a| a as usize).sum::<usize>();
                let rank = total_degree as i64 - offset;
                if best.as_ref().is_none_or(|b| rank < b.0) {
                    let w = ResidualWitness { condition, total_degree, q_exponent: q, p_power: k, coefficient: c };
                    best = Some((rank, w));
                }
            }
        }
        Ok(best.map(|(_, w)| w))
    }

    pub fn vanishes_for_degree(&self, d: usize) -> Result<bool> {
        Ok(self.witness_for_degree(d)?.is_none())
    }
}

/// Computes the residuals of the nilpotency conditions for `spec`.
pub fn nilpotency_conditions(spec: &DeltaSpec) -> NilpotencyResiduals {
    let n = spec.n_bosons();
    let f: Vec<MomentumPoly> = (0..FERMIONS).map(|a| MomentumPoly::from_genfn(spec.f(a))).collect();
    let h: Vec<MomentumPoly> = (0..FERMIONS).map(|a| MomentumPoly::from_genfn(spec.h(a))).collect();
    // g[α][i]
    let g: Vec<Vec<MomentumPoly>> = (0..FERMIONS)
        .map(|a| (0..n).map(|i| MomentumPoly::from_genfn(spec.g(a, i))).collect())
        .collect();

    let eps = |e: i64| rat(e);
    let mut first = Vec::with_capacity(n);
    for i in 0..n {
        let mut r = MomentumPoly::zero(n);
        for gamma in 0..FERMIONS {
            r = r.add(&g[gamma][i].mul(&f[gamma]));
        }
        for alpha in 0..FERMIONS {
            for beta in 0..FERMIONS {
                let e = EPS_UPPER[alpha][beta];
                if e == 0 {
                    continue;
                }
                for j in 0..n {
                    r = r.add(&g[alpha][i].partial(j).mul(&g[beta][j]).scale(&eps(e)));
                }
            }
        }
        first.push(r);
    }

    let second_entry = |alpha: usize, beta: usize| {
        let mut r = MomentumPoly::zero(n);
        for gamma in 0..FERMIONS {
            let e = EPS_LOWER[gamma][beta];
            if e != 0 {
                r = r.add(&f[alpha].mul(&h[gamma]).scale(&eps(e)));
            }
        }
        for i in 0..n {
            r = r.add(&h[alpha].partial(i).mul(&g[beta][i]));
        }
        r
    };
    let second = [[second_entry(0, 0), second_entry(0, 1)], [second_entry(1, 0), second_entry(1, 1)]];

    let third = (0..n)
        .map(|i| {
            (0..FERMIONS).fold(MomentumPoly::zero(n), |acc, a| acc.add(&g[a][i].mul(&h[a])))
        })
        .collect();

    NilpotencyResiduals { first, second, third }
}
