//! Exact integer/rational linear algebra, characteristic polynomials,
//! certified root-modulus computation, the cyclotomic-product decision, and
//! subspace calculus.

pub mod algebraic;
pub mod complex;
pub mod cyclotomic;
pub mod dyadic;
pub mod field;
pub mod matrix;
pub mod numberfield;
pub mod poly;
pub mod realfield;
pub mod roots;
pub mod spectrum;
pub mod subspace;

pub use algebraic::{AlgebraicValue, RatRect, Region};
pub use cyclotomic::{cyclotomic, cyclotomic_factors, is_cyclotomic_product};
pub use field::{ExactField, OrderedExactField, RatInterval};
pub use matrix::{ExactMatrix, Matrix, MatrixMode};
pub use numberfield::{eigenspace, EigenspaceBasis, EigenvalueArg};
pub use poly::{IntPolynomial, Poly, QPoly};
pub use realfield::{RealElem, RealFieldCtx};
pub use spectrum::{max_modulus_root, spectrum_moduli, MaxModulusRoot, Modulus};
pub use subspace::{fixed_space, largest_invariant_subspace, RationalSubspace, Subspace};

use thiserror::Error;

/// Errors of the exact-algebra layer.
#[derive(Debug, Error)]
pub enum ExactAlgError {
    /// An operation precondition was violated by the caller.
    #[error("precondition violation: {0}")]
    Precondition(String),

    /// A certified refinement did not reach its target within budget; the
    /// partial state is described, never silently degraded.
    #[error("refinement failure: {detail}")]
    RefinementFailure { detail: String },

    /// `eigenspace` was asked for a value that is not an eigenvalue.
    #[error("not an eigenvalue: the defining factor does not divide the characteristic polynomial")]
    NotAnEigenvalue,

    /// Work exceeded a configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}
