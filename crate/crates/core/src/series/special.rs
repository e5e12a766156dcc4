//! One-boson nilpotency machinery and the Lambert-type series.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::Series;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const DEFAULT_SERIES_ORDER: usize = 32;

/// `W(g1, g2) = g1' g2 - g1 g2'`.
pub fn wronskian(g1: &Series, g2: &Series) -> Series {
    &(&g1.derivative() * g2) - &(g1 * &g2.derivative())
}

/// Residual `g1 f¹ + g2 f² + W(g1, g2)` of the single-boson nilpotency
/// condition; zero iff the condition holds at the residual's precision.
pub fn nilcheck_one_boson(f1: &Series, f2: &Series, g1: &Series, g2: &Series) -> Series {
    &(&(g1 * f1) + &(g2 * f2)) + &wronskian(g1, g2)
}

fn require_invertible(g1: &Series) -> Result<()> {
    match g1.coeffs().first() {
        Some(c) if !c.is_zero() => Ok(()),
        _ => Err(Error::arg("g1(0) must be nonzero")),
    }
}

/// `f¹ = -W(g1, g2) / g1`, which together with `f² = 0` solves the
/// single-boson condition.
pub fn solve_f1(g1: &Series, g2: &Series) -> Result<Series> {
    require_invertible(g1)?;
    Ok(-&(&wronskian(g1, g2) * &g1.inverse()?))
}

/// `g2 = g1 · (ratio_at_zero + ∫_0^p f¹/g1)`, which together with `f² = 0`
/// solves the single-boson condition.
pub fn solve_g2(g1: &Series, f1: &Series, ratio_at_zero: Rational) -> Result<Series> {
    require_invertible(g1)?;
    let integrand = f1 * &g1.inverse()?;
    Ok(g1 * &integrand.integral(ratio_at_zero))
}

/// Lambert function `W(P)` through `P^order`, found order by order from
/// `W e^W = P` with `W(0) = 0`.
pub fn lambert_w_series(order: usize) -> Series {
    let mut w = vec![Rational::zero(); order + 1];
    for n in 1..=order {
        // W e^W = W + W^2 + ..., so its n-th coefficient is w_n plus terms in
        // lower coefficients only; with w_n still zero we read off the rest.
        let partial = Series::new(w[..=n].to_vec());
        let rest = &partial * &partial.exp().expect("W(0) = 0");
        let target = if n == 1 { Rational::one() } else { Rational::zero() };
        w[n] = target - &rest.coeffs()[n];
    }
    Series::new(w)
}

/// `G(P)` through `P^order`, solving `G'(P) (G(P) + P) = G(P)` with
/// `G(0) = 1` order by order.
pub fn g_series(order: usize) -> Series {
    let mut g = vec![Rational::one()];
    // P^n coefficient: Σ_{k=0}^{n} (k+1) g_{k+1} [G+P]_{n-k} = g_n, [G+P]_0 = 1.
    for n in 0..order {
        let mut acc = g[n].clone();
        for k in 0..n {
            let mut shifted = g[n - k].clone();
            if n - k == 1 {
                shifted += Rational::one();
            }
            acc -= Rational::from_integer(BigInt::from(k + 1)) * &g[k + 1] * shifted;
        }
        g.push(acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    Series::new(g)
}

/// `|c_{n+1} / c_n|` in floating point, for ratio-test diagnostics.
pub fn coefficient_ratio(series: &Series, n: usize) -> Result<f64> {
    let a = series.coeff(n)?;
    let b = series.coeff(n + 1)?;
    if a.is_zero() {
        return Err(Error::arg(format!("coefficient {n} is zero")));
    }
    rational::abs(&(b / a))
        .to_f64()
        .ok_or_else(|| Error::arg("ratio is not representable as f64"))
}
