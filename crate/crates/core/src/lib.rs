//! Exact-arithmetic analysis of finitely generated groups of integer lattice
//! automorphisms preserving a strictly convex closed cone.
//!
//! The crate decides, with certificates and never with floating point in any
//! load-bearing position:
//!
//! * existence of a common eigenray in the cone for (candidate) solvable
//!   groups, by a constructive triangularization descent ([`kolchin`]);
//! * null vs. positive entropy of a single lattice automorphism, exactly,
//!   via the cyclotomic-product test ([`entropy`]);
//! * the rank of the quotient of the group by its null-entropy kernel, with
//!   certified lower bounds (interval independence) and certified upper
//!   bounds (exact word relations) ([`entropy`]);
//! * the Lorentzian specialization where the rank collapses to 0 or 1, Salem
//!   shape detection, and dynamical degree sequences ([`hyperbolic`]).
//!
//! Everything is built on exact rational linear algebra and certified real
//! algebraic numbers ([`exactalg`]) and on exact polyhedral / Lorentzian cone
//! geometry ([`cones`]).

pub mod cones;
pub mod entropy;
pub mod exactalg;
pub mod hyperbolic;
pub mod kolchin;

pub use exactalg::{
    AlgebraicValue, ExactMatrix, IntPolynomial, MatrixMode, RationalSubspace,
};





#[cfg(test)]
use num_bigint::BigInt;
#[cfg(test)]
use num_rational::BigRational;

/// Resource limits shared by the search-flavoured operations.
///
/// Exceeding a budget is always reported as a fault distinct from a wrong
/// answer; partial data computed so far is carried in the fault where the
/// operation contract says so.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Target bits for certified enclosures (default 128).
    pub precision_bits: u32,
    /// Rounds of integer-relation proposal in rank computations (default 8).
    pub relation_depth: u32,
    /// Cap on the total exponent length of candidate relation words (default 16).
    pub max_word_len: u32,
    /// Cap on the degree of the real algebraic field grown by the
    /// eigenray cascade and the flag search.
    pub max_field_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            precision_bits: 128,
            relation_depth: 8,
            max_word_len: 16,
            max_field_degree: 64,
        }
    }
}

#[cfg(test)]
pub(crate) fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
