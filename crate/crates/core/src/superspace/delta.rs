use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{SuperMonomial, SuperPoly};
use super::FERMIONS;
use crate::error::{Error, Result};
use crate::rational::{factorial, ratio, Rational};
use crate::series::Series;

/// `ε^{αβ}` with `ε^{12} = 1`.
pub const EPS_UPPER: [[i64; 2]; 2] = [[0, 1], [-1, 0]];
/// `ε_{αβ}` with `ε_{21} = 1`, so that `ε^{αβ} ε_{βγ} = δ^α_γ`.
pub const EPS_LOWER: [[i64; 2]; 2] = [[0, -1], [1, 0]];

/// Generating function of the boson momenta of the form
/// `F(p) = R(P) + Σ_j ℓ_j p^j` with `P = p¹ + .. + p^N`.
///
/// With one boson this is an arbitrary series in `p`; with several it covers
/// the functions of the total momentum plus a linear part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFn {
    radial: Series,
    linear: Vec<Rational>,
}

impl GenFn {
    pub fn radial(series: Series, n_bosons: usize) -> Self {
        GenFn { radial: series, linear: vec![Rational::zero(); n_bosons] }
    }

    pub fn with_linear(series: Series, linear: Vec<Rational>) -> Self {
        GenFn { radial: series, linear }
    }

    pub fn zero(n_bosons: usize, order: usize) -> Self {
        GenFn::radial(Series::zero(order), n_bosons)
    }

    pub fn radial_part(&self) -> &Series {
        &self.radial
    }

    pub fn linear_part(&self) -> &[Rational] {
        &self.linear
    }

    pub fn n_bosons(&self) -> usize {
        self.linear.len()
    }

    pub fn order(&self) -> i64 {
        self.radial.order()
    }

    pub fn is_zero(&self) -> bool {
        self.radial.is_zero() && self.linear.iter().all(Zero::is_zero)
    }

    /// Ordinary coefficient of `p^m`; the bracket coefficient is `m!` times it.
    pub fn coeff(&self, m: &[u32]) -> Result<Rational> {
        let total: u32 = m.iter().sum();
        let r = self.radial.coeff(total as usize)?;
        let mut c = if r.is_zero() {
            Rational::zero()
        } else {
            let denom = m.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k as u64));
            r * Rational::new(factorial(total as u64), denom)
        };
        if total == 1 {
            let j = m.iter().position(|&k| k == 1).expect("unit multi-index");
            c += &self.linear[j];
        }
        Ok(c)
    }

    /// `F(∂_x) x^k` as a list of `(k - m, coefficient)`.
    pub fn apply_to(&self, k: &[u32]) -> Result<Vec<(Vec<u32>, Rational)>> {
        let mut out = Vec::new();
        let mut m = vec![0u32; k.len()];
        loop {
            let c = self.coeff(&m)?;
            if !c.is_zero() {
                let mut falling = BigInt::one();
                for (&ki, &mi) in k.iter().zip(&m) {
                    for t in 0..mi {
                        falling *= ki - t;
                    }
                }
                let rest = k.iter().zip(&m).map(|(a, b)| a - b).collect();
                out.push((rest, c * Rational::from_integer(falling)));
            }
            // odometer over 0 ≤ m ≤ k
            let mut pos = 0;
            loop {
                if pos == k.len() {
                    return Ok(out);
                }
                if m[pos] < k[pos] {
                    m[pos] += 1;
                    break;
                }
                m[pos] = 0;
                pos += 1;
            }
        }
    }

    pub fn map_radial(&self, f: impl FnOnce(&Series) -> Series) -> GenFn {
        GenFn { radial: f(&self.radial), linear: self.linear.clone() }
    }
}

/// Data of `Δ = ½ θ_γ f^γ(∂_x) ε_{αβ} ∂_{θ_β} ∂_{θ_α} + x_i g^i_α(∂_x) ∂_{θ_α} + θ_α h^α(∂_x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSpec {
    n_bosons: usize,
    f: [GenFn; 2],
    /// `g[α][i]` is `g^i_α`.
    g: [Vec<GenFn>; 2],
    h: [GenFn; 2],
    selection_rule: bool,
}

impl DeltaSpec {
    pub fn new(n_bosons: usize, f: [GenFn; 2], g: [Vec<GenFn>; 2], h: [GenFn; 2]) -> Result<Self> {
        if n_bosons == 0 {
            return Err(Error::arg("at least one boson is required"));
        }
        let all = f.iter().chain(h.iter()).chain(g.iter().flatten());
        for gf in all {
            if gf.n_bosons() != n_bosons {
                return Err(Error::arg(format!(
                    "generating function over {} bosons in a spec with {n_bosons}",
                    gf.n_bosons()
                )));
            }
        }
        if g.iter().any(|row| row.len() != n_bosons) {
            return Err(Error::arg(format!("g must be a 2 × {n_bosons} array")));
        }
        Ok(DeltaSpec { n_bosons, f, g, h, selection_rule: false })
    }

    /// Imposes the degree selection rule: `h ≡ 0`, hence `Δ₀ = 0` and no
    /// zero-input bracket.
    pub fn with_selection_rule(mut self) -> Self {
        for h in &mut self.h {
            *h = GenFn::zero(self.n_bosons, h.order().max(0) as usize);
        }
        self.selection_rule = true;
        self
    }

    pub fn selection_rule(&self) -> bool {
        self.selection_rule
    }

    pub fn n_bosons(&self) -> usize {
        self.n_bosons
    }

    /// Lowest order among all generating functions; `Δ` is exact on
    /// polynomials of boson degree up to this.
    pub fn order(&self) -> i64 {
        self.all_fns().map(GenFn::order).min().unwrap_or(-1)
    }

    fn all_fns(&self) -> impl Iterator<Item = &GenFn> {
        self.f.iter().chain(self.h.iter()).chain(self.g.iter().flatten())
    }

    pub fn f(&self, alpha: usize) -> &GenFn {
        &self.f[alpha]
    }

    pub fn g(&self, alpha: usize, i: usize) -> &GenFn {
        &self.g[alpha][i]
    }

    pub fn h(&self, alpha: usize) -> &GenFn {
        &self.h[alpha]
    }

    pub fn set_f(&mut self, alpha: usize, f: GenFn) {
        assert_eq!(f.n_bosons(), self.n_bosons);
        self.f[alpha] = f;
    }

    pub fn set_g(&mut self, alpha: usize, i: usize, g: GenFn) {
        assert_eq!(g.n_bosons(), self.n_bosons);
        self.g[alpha][i] = g;
    }

    /// Replaces `h^α`; clears the selection rule flag when `h` is nonzero.
    pub fn set_h(&mut self, alpha: usize, h: GenFn) {
        assert_eq!(h.n_bosons(), self.n_bosons);
        if !h.is_zero() {
            self.selection_rule = false;
        }
        self.h[alpha] = h;
    }

    pub fn is_zero(&self) -> bool {
        self.all_fns().all(GenFn::is_zero)
    }
}

/// `Δ(poly)`. Fails with [`Error::Truncated`] when a boson degree exceeds the
/// precision of the generating functions.
pub fn apply_delta(spec: &DeltaSpec, poly: &SuperPoly) -> Result<SuperPoly> {
    let mut out = SuperPoly::zero(spec.n_bosons);
    for (mono, c) in poly.iter() {
        delta_monomial(spec, mono, c, &mut out)?;
    }
    Ok(out)
}

fn delta_monomial(spec: &DeltaSpec, mono: &SuperMonomial, c: &Rational, out: &mut SuperPoly) -> Result<()> {
    let half = ratio(1, 2);
    // Δ₂: ∂_{θ_α} first, then ∂_{θ_β}, then f^γ(∂_x), then θ_γ.
    for alpha in 0..FERMIONS {
        for beta in 0..FERMIONS {
            let eps = EPS_LOWER[alpha][beta];
            if eps == 0 {
                continue;
            }
            let Some((s1, m1)) = mono.theta_derivative(alpha) else { continue };
            let Some((s2, m2)) = m1.theta_derivative(beta) else { continue };
            let base = c * &half * Rational::from_integer(eps.into());
            for gamma in 0..FERMIONS {
                for (bosons, k) in spec.f[gamma].apply_to(m2.bosons())? {
                    if let Some((s3, m3)) = m2.with_bosons(bosons).theta_mul(gamma) {
                        out.add_signed(s1 * s2 * s3, m3, &base * k);
                    }
                }
            }
        }
    }
    // Δ₁: ∂_{θ_α}, then g^i_α(∂_x), then x_i.
    for alpha in 0..FERMIONS {
        let Some((s1, m1)) = mono.theta_derivative(alpha) else { continue };
        for i in 0..spec.n_bosons {
            for (mut bosons, k) in spec.g[alpha][i].apply_to(m1.bosons())? {
                bosons[i] += 1;
                out.add_signed(s1, m1.with_bosons(bosons), c * k);
            }
        }
    }
    // Δ₀: h^α(∂_x), then θ_α.
    for alpha in 0..FERMIONS {
        if spec.h[alpha].is_zero() && spec.selection_rule {
            continue;
        }
        for (bosons, k) in spec.h[alpha].apply_to(mono.bosons())? {
            if let Some((s, m)) = mono.with_bosons(bosons).theta_mul(alpha) {
                out.add_signed(s, m, c * k);
            }
        }
    }
    Ok(())
}
