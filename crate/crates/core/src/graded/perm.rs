use std::fmt;
use std::ops::Mul;


use super::parity;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn apply(self, r: Rational) -> Rational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_minus() { "-1" } else { "+1" })
    }
}

/// A permutation of `n` positions, stored 0-based.
///
/// `images[k]` names the original position that ends up at position `k`, so
/// [`Permutation::permute`] maps `(a_0, .., a_{n-1})` to
/// `(a_{σ(0)}, .., a_{σ(n-1)})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::arg(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from the usual 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::arg("one-based permutation contains 0"));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len(), "permutation length mismatch");
        self.images.iter().map(|&i| items[i].clone()).collect()
    }

    /// Reordering by `other` first and then by `self`:
    /// `self.compose(other).permute(a) == self.permute(&other.permute(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation length mismatch");
        Permutation {
            images: self.images.iter().map(|&k| other.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i] = k;
        }
        Permutation { images: inv }
    }

    /// Sorting permutation: `argsort(keys).permute(keys)` is sorted, ties kept
    /// in their original order.
    pub fn argsort<K: Ord>(keys: &[K]) -> Permutation {
        let mut images: Vec<usize> = (0..keys.len()).collect();
        images.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        Permutation { images }
    }

    /// Pairs of original positions `(a, b)`, `a < b`, that the permutation
    /// places out of order.
    fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |x| {
            (x + 1..n).filter_map(move |y| {
                let (i, j) = (self.images[x], self.images[y]);
                (i > j).then_some((j, i))
            })
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str(")")
    }
}

pub fn perm_sign(sigma: &Permutation) -> Sign {
    Sign::from_parity(sigma.inversions().count() % 2 == 1)
}

/// Koszul sign of reordering elements of the given degrees by `sigma`: every
/// transposed pair contributes `(-1)^{deg_a * deg_b}`.
pub fn koszul_sign(sigma: &Permutation, degrees: &[i64]) -> Result<Sign> {
    if degrees.len() != sigma.len() {
        return Err(Error::arg(format!(
            "{} degrees given for a permutation of {} elements",
            degrees.len(),
            sigma.len()
        )));
    }
    let odd_swaps = sigma
        .inversions()
        .filter(|&(a, b)| parity(degrees[a]) * parity(degrees[b]) == 1)
        .count();
    Ok(Sign::from_parity(odd_swaps % 2 == 1))
}

/// All `(i, n - i)` unshuffles in lexicographic order of the first block.
pub fn unshuffles(i: usize, n: usize) -> Result<Vec<Permutation>> {
    if i > n {
        return Err(Error::arg(format!("unshuffle split {i} exceeds {n}")));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    choose(0, n, i, &mut chosen, &mut |front| {
        let mut images = front.to_vec();
        images.extend((0..n).filter(|k| !front.contains(k)));
        out.push(Permutation { images });
    });
    Ok(out)
}

fn choose(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    let remaining = k - acc.len();
    for x in start..=(n - remaining) {
        acc.push(x);
        choose(x + 1, n, k, acc, emit);
        acc.pop();
    }
}
