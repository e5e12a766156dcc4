//! Degrees, parities, Koszul signs, permutations and the (de)suspension shift.
//!
//! Degrees follow the cochain convention: the skew brackets `l_n` on `V` have
//! degree `2 - n`. Parity is always derived from the integer degree.

mod perm;
mod space;

pub use perm::{koszul_sign, perm_sign, unshuffles, Permutation, Sign};
pub use space::{Element, Generator, GradedSpace};

/// Grassmann parity of an integer degree (0 even, 1 odd).
pub fn parity(degree: i64) -> u8 {
    degree.rem_euclid(2) as u8
}

/// `W_n = V_{n+1}`: an element of `V` of degree `d` lands in degree `d - 1`.
pub fn desuspend_degree(d: i64) -> i64 {
    d - 1
}

pub fn suspend_degree(d: i64) -> i64 {
    d + 1
}
