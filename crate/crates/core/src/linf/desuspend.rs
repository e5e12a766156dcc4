use super::system::{BracketSystem, Symmetry};
use crate::error::{Error, Result};
use crate::graded::{parity, GradedSpace, Sign};

/// Sign relating `l̂_n = (-1)^{n(n-1)/2} ↓∘l_n∘↑^{⊗n}` to `l_n` on a tuple
/// whose desuspended degrees are `w_degrees`.
///
/// `↑` has degree +1, so the `↑` acting on factor `k` passes the `k - 1`
/// factors to its left, each contributing `(-1)^{deg}`. The result is its own
/// inverse and serves both directions.
pub fn desuspension_sign(w_degrees: &[i64]) -> Sign {
    let n = w_degrees.len();
    let global = (n * n.saturating_sub(1) / 2) % 2 == 1;
    let passes: usize = w_degrees
        .iter()
        .enumerate()
        .map(|(k, &d)| (n - 1 - k) * parity(d) as usize)
        .sum();
    Sign::from_parity(global != (passes % 2 == 1))
}

fn transfer(sys: &BracketSystem, target_space: GradedSpace, target: Symmetry, max_arity: usize) -> Result<BracketSystem> {
    let shift = match target {
        Symmetry::Symmetric => -1,
        Symmetry::Skew => 1,
    };
    let expected = sys.space().shifted("", shift, |n| n.to_string());
    if !expected.same_shape(&target_space) {
        return Err(Error::arg(format!(
            "space {} is not the {} of {}",
            target_space.label(),
            if shift < 0 { "desuspension" } else { "suspension" },
            sys.space().label()
        )));
    }
    let mut out = BracketSystem::new(target_space, target, max_arity).with_grading(sys.grading());
    for (key, value) in sys.entries() {
        let w_degrees: Vec<i64> = match target {
            Symmetry::Symmetric => out.space().degrees(key)?,
            Symmetry::Skew => sys.space().degrees(key)?,
        };
        out.insert(key, value.signed(desuspension_sign(&w_degrees)))?;
    }
    Ok(out)
}

/// Converts skew brackets `l_n` on `V` into symmetric degree +1 brackets on
/// `W = ↓V`, naming generators `↓name`.
pub fn desuspend_system(sys: &BracketSystem) -> Result<BracketSystem> {
    let space = sys
        .space()
        .shifted(format!("↓{}", sys.space().label()), -1, |n| format!("↓{n}"));
    desuspend_system_onto(sys, space)
}

/// As [`desuspend_system`], onto an explicitly named target space of the same
/// shape (dimension and shifted degrees).
pub fn desuspend_system_onto(sys: &BracketSystem, w_space: GradedSpace) -> Result<BracketSystem> {
    if sys.symmetry() != Symmetry::Skew {
        return Err(Error::arg("desuspension expects a skew system"));
    }
    transfer(sys, w_space, Symmetry::Symmetric, sys.max_arity())
}

/// Inverse of [`desuspend_system`].
pub fn suspend_system(sys: &BracketSystem) -> Result<BracketSystem> {
    let space = sys.space().shifted(format!("↑{}", sys.space().label()), 1, |n| {
        n.strip_prefix('↓').map_or_else(|| format!("↑{n}"), str::to_string)
    });
    suspend_system_onto(sys, space)
}

pub fn suspend_system_onto(sys: &BracketSystem, v_space: GradedSpace) -> Result<BracketSystem> {
    if sys.symmetry() != Symmetry::Symmetric {
        return Err(Error::arg("suspension expects a symmetric system"));
    }
    transfer(sys, v_space, Symmetry::Skew, sys.max_arity())
}
