//! Exact verification engine for finite-dimensional homotopy Lie (L∞) algebras.
//!
//! Two formulations are supported and cross-checked against each other:
//!
//! * the algebraic one, where a skew-symmetric bracket system `l_n` on a graded
//!   space `V` must satisfy the generalized Jacobi identities ([`linf`]);
//! * the operator one, where a Grassmann-odd differential operator `Δ` on the
//!   super-symmetric algebra of `W = ↓V` must square to zero ([`superspace`]).
//!
//! All arithmetic is exact over the rationals. Truncated power series
//! ([`series`]) track their own precision, and operations that would need
//! coefficients beyond it fail instead of silently losing exactness.

pub mod document;
pub mod error;
pub mod exec;
pub mod examples;
pub mod graded;
pub mod linf;
pub mod rational;
pub mod series;
pub mod superspace;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use rational::Rational;
