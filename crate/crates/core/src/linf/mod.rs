//! Bracket systems on graded spaces: skew-symmetric `l_n` on `V`, symmetric
//! degree +1 brackets `Φⁿ` on `W = ↓V`, the generalized Jacobi checker and the
//! desuspension functor between the two pictures.

mod desuspend;
mod jacobi;
mod system;

pub use desuspend::{desuspend_system, desuspend_system_onto, desuspension_sign, suspend_system, suspend_system_onto};
pub use jacobi::{
    jacobi_defect, jacobi_terms, verify_jacobi, verify_jacobi_with, ArityReport, Counterexample, JacobiReport,
};
pub use system::{canonical_tuples, BracketSystem, Grading, Symmetry, DEFAULT_MAX_ARITY};
