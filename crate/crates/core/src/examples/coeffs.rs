use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, neg_one_pow, pow, rat, Rational};

/// Which coefficient family a [`CoeffSequence`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    /// First example, closed form `C_n = (-1)^{(n-2)(n-3)/2} (n-3)!`.
    Example1Closed,
    /// First example, recursion `C_n = (-1)^{n-1} (n-3) C_{n-1}`.
    Example1Recursive,
    /// Second example, the Daily recursion seeded by `C_3 = 1`.
    Example2Daily,
    /// Second example, `B_M = (1 - M)^{M-1}`.
    Example2B,
}

impl CoeffKind {
    /// First index at which the sequence is defined.
    pub fn first_index(self) -> usize {
        match self {
            CoeffKind::Example2B => 0,
            _ => 3,
        }
    }
}

/// Exact coefficients indexed by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSequence {
    pub kind: CoeffKind,
    pub values: BTreeMap<usize, Rational>,
}

impl CoeffSequence {
    /// All values from the first defined index through `n_max`.
    pub fn generate(kind: CoeffKind, n_max: usize) -> Result<Self> {
        let start = kind.first_index();
        if n_max < start {
            return Err(Error::arg(format!("{kind:?} is defined from n = {start}")));
        }
        let values: Vec<Rational> = match kind {
            CoeffKind::Example1Closed => (start..=n_max).map(c1_closed).collect::<Result<_>>()?,
            CoeffKind::Example1Recursive => c1_recursive_table(n_max),
            CoeffKind::Example2Daily => daily_table(n_max),
            CoeffKind::Example2B => (0..=n_max).map(b_closed).collect(),
        };
        let values = (start..=n_max).zip(values).collect();
        Ok(CoeffSequence { kind, values })
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(&n)
    }
}

fn require_from_three(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::arg(format!("C_n is defined for n ≥ 3, got {n}")))
    } else {
        Ok(())
    }
}

pub fn c1_closed(n: usize) -> Result<Rational> {
    require_from_three(n)?;
    let sign = neg_one_pow(((n - 2) * (n - 3) / 2) as i64);
    Ok(sign * Rational::from_integer(factorial(n as u64 - 3)))
}

/// `C_3 ..= C_{n_max}` by the first-example recursion.
fn c1_recursive_table(n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for n in 4..=n_max {
        let prev = out.last().expect("seeded");
        out.push(neg_one_pow(n as i64 - 1) * rat(n as i64 - 3) * prev);
    }
    out
}

pub fn c1_recursive(n: usize) -> Result<Rational> {
    require_from_three(n)?;
    Ok(c1_recursive_table(n).pop().expect("nonempty"))
}

/// `C_3 ..= C_{n_max}` by the Daily recursion.
fn daily_table(n_max: usize) -> Vec<Rational> {
    // c[n] = C_n; entries below 3 are unused.
    let mut c = vec![Rational::zero(); n_max.max(3) + 1];
    c[3] = Rational::one();
    for n in 4..=n_max {
        let mut acc = rat(-2 * (n as i64 - 2)) * &c[n - 1];
        for p in 3..=n.saturating_sub(2) {
            let b = Rational::from_integer(binomial(n as u64 - 2, p as u64 - 1));
            acc += neg_one_pow((p * n + 1) as i64) * b * &c[n - p + 1] * &c[p];
        }
        c[n] = neg_one_pow(n as i64) * acc;
    }
    c.split_off(3)
}

pub fn c2_daily(n: usize) -> Result<Rational> {
    require_from_three(n)?;
    Ok(daily_table(n).pop().expect("nonempty"))
}

/// `B_M = (1 - M)^{M-1}` with `0^0 = 1`.
pub fn b_closed(m: usize) -> Rational {
    pow(&rat(1 - m as i64), m as i64 - 1)
}

/// Rescales so that `B_0 = 1`: `B'_M = B_0^{M-1} B_M`.
pub fn normalize_scaling(b: &CoeffSequence) -> Result<CoeffSequence> {
    let b0 = b.get(0).filter(|c| !c.is_zero()).ok_or_else(|| Error::arg("normalization needs B_0 ≠ 0"))?;
    let values = b
        .values
        .iter()
        .map(|(&m, c)| (m, pow(b0, m as i64 - 1) * c))
        .collect();
    Ok(CoeffSequence { kind: b.kind, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(c1_closed(3).unwrap(), rat(1));
        assert_eq!(c1_closed(4).unwrap(), rat(-1));
        assert_eq!(c1_recursive(5).unwrap(), rat(-2));
        assert_eq!(c2_daily(4).unwrap(), rat(-4));
        assert_eq!(c2_daily(5).unwrap(), rat(-27));
        assert_eq!(c2_daily(6).unwrap(), rat(256));
        let b: Vec<_> = (0..5).map(b_closed).collect();
        assert_eq!(b, vec![rat(1), rat(1), rat(-1), rat(4), rat(-27)]);
        assert!(c1_closed(2).is_err());
        assert!(c2_daily(0).is_err());
    }

    #[test]
    fn normalization() {
        let seq = CoeffSequence { kind: CoeffKind::Example2B, values: (0..4).map(|m| (m, rat(2))).collect() };
        let n = normalize_scaling(&seq).unwrap();
        assert_eq!(n.get(0), Some(&rat(1)));
        assert_eq!(n.get(1), Some(&rat(2)));
        assert_eq!(n.get(2), Some(&rat(4)));
        assert_eq!(normalize_scaling(&n).unwrap(), n);
        let zero = CoeffSequence { kind: CoeffKind::Example2B, values: [(0, rat(0))].into() };
        assert!(normalize_scaling(&zero).is_err());
    }
}
