//! The super-symmetric algebra on `W = W₋₁ ⊕ W₀` (two fermions `θ₁, θ₂` and
//! `N` bosons `x₁..x_N`), the odd operator `Δ = Δ₂ + Δ₁ + Δ₀` built from
//! generating functions, its nilpotency checks, and the Koszul bracket
//! hierarchy it induces.
//!
//! Basis order of `W` used for bracket tables: `θ₁, θ₂, x₁, .., x_N`.

mod delta;
mod koszul;
mod nilpotency;
mod poly;

pub use delta::{apply_delta, DeltaSpec, GenFn, EPS_LOWER, EPS_UPPER};
pub use koszul::{brackets_from_delta, brackets_from_delta_with, koszul_bracket, superspace_basis};
pub use nilpotency::{
    delta_squared_check, delta_squared_check_with, nilpotency_conditions, DeltaCheckReport, MomentumPoly,
    NilpotencyResiduals, ResidualWitness,
};
pub use poly::{SuperMonomial, SuperPoly};

/// Number of fermionic generators.
pub const FERMIONS: usize = 2;
