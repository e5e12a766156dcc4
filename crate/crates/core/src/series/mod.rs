//! Exact truncated power series in one variable.
//!
//! A [`Series`] stores the coefficients it knows exactly, `c_0 ..= c_order`.
//! Binary operations keep the smaller precision, differentiation loses one
//! order and integration gains one, so a result never claims more than its
//! inputs determine.

mod special;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use special::{
    coefficient_ratio, g_series, lambert_w_series, nilcheck_one_boson, solve_f1, solve_g2, wronskian,
    DEFAULT_SERIES_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series known through `p^{coeffs.len() - 1}`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    /// Polynomial coefficients padded with zeros (or cut) to the given order.
    pub fn from_poly(coeffs: &[Rational], order: usize) -> Self {
        Series::from_fn(order, |n| coeffs.get(n).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::from_fn(order, |n| coeffs.get(n).map_or_else(Rational::zero, |&c| rational::rat(c)))
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// The series variable `p` itself.
    pub fn variable(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Number of exactly known coefficients.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest known exponent, `-1` when nothing is known.
    pub fn order(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs
            .get(n)
            .ok_or(Error::Truncated { needed: n, known: self.order() })
    }

    /// `n! · c_n`, the `n`-th derivative at zero.
    pub fn taylor_value(&self, n: usize) -> Result<Rational> {
        Ok(self.coeff(n)? * Rational::from_integer(rational::factorial(n as u64)))
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series { coeffs: self.coeffs.iter().take(order + 1).cloned().collect() }
    }

    /// Agreement on all coefficients through `order`; both must know them.
    pub fn agrees_through(&self, other: &Series, order: usize) -> bool {
        self.precision() > order && other.precision() > order && self.coeffs[..=order] == other.coeffs[..=order]
    }

    pub fn scale(&self, factor: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn derivative(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * Rational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    /// Antiderivative with the given constant term.
    pub fn integral(&self, constant: Rational) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(constant);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / Rational::from_integer(BigInt::from(n + 1))),
        );
        Series { coeffs }
    }

    fn require_constant(&self, what: &str, ok: impl Fn(&Rational) -> bool, expected: &str) -> Result<()> {
        match self.coeffs.first() {
            Some(c) if ok(c) => Ok(()),
            Some(c) => Err(Error::arg(format!(
                "{what} needs constant term {expected}, got {}",
                rational::display(c)
            ))),
            None => Err(Error::Truncated { needed: 0, known: -1 }),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        self.require_constant("inverse", |c| !c.is_zero(), "≠ 0")?;
        let c0_inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.precision());
        out.push(c0_inv.clone());
        for n in 1..self.precision() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Series { coeffs: out })
    }

    /// `exp(s)`; requires `s(0) = 0`.
    pub fn exp(&self) -> Result<Series> {
        self.require_constant("exp", Zero::is_zero, "0")?;
        // n e_n = Σ_{k=1}^{n} k s_k e_{n-k}
        let mut out: Vec<Rational> = Vec::with_capacity(self.precision());
        out.push(Rational::one());
        for n in 1..self.precision() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * Rational::from_integer(BigInt::from(k)) * &out[n - k];
            }
            out.push(acc / Rational::from_integer(BigInt::from(n)));
        }
        Ok(Series { coeffs: out })
    }

    /// `ln(s)`; requires `s(0) = 1`.
    pub fn ln(&self) -> Result<Series> {
        self.require_constant("ln", One::is_one, "1")?;
        let quotient = &self.derivative() * &self.inverse()?;
        Ok(quotient.integral(Rational::zero()))
    }

    /// `ln(1 + s)`; requires `s(0) = 0`.
    pub fn ln1p(&self) -> Result<Series> {
        self.require_constant("ln1p", Zero::is_zero, "0")?;
        (&Series::one(self.order().max(0) as usize) + self).ln()
    }

    /// `self(inner(p))`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        inner.require_constant("composition", Zero::is_zero, "0")?;
        let prec = self.precision().min(inner.precision());
        if prec == 0 {
            return Ok(Series::new(Vec::new()));
        }
        let inner = inner.truncate(prec - 1);
        let mut acc = Series::constant(self.coeffs[prec - 1].clone(), prec - 1);
        for k in (0..prec - 1).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.precision().min(rhs.precision());
        Series { coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.precision().min(rhs.precision());
        Series { coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.precision().min(rhs.precision());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sep, mag) = match (wrote, c < &Rational::zero()) {
                (false, false) => ("", c.clone()),
                (false, true) => ("-", -c),
                (true, false) => (" + ", c.clone()),
                (true, true) => (" - ", -c),
            };
            f.write_str(sep)?;
            let var = match n {
                0 => String::new(),
                1 => "p".to_string(),
                _ => format!("p^{n}"),
            };
            if n == 0 || !mag.is_one() {
                f.write_str(&rational::display(&mag))?;
                if n > 0 {
                    f.write_str(" ")?;
                }
            }
            f.write_str(&var)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(p^{})", self.precision())
    }
}
