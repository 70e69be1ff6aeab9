//! Exact arithmetic foundation: arbitrary-precision rationals, sparse
//! multivariate polynomials, rational functions, resultants and exact
//! division.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so the whole module is safe to use from concurrent callers.

mod mpoly;
mod ratfunc;
mod resultant;

pub use mpoly::{ExactError, MPoly, Var};
pub use ratfunc::RatFunc;
pub use resultant::resultant;

/// Arbitrary-precision rational.  `num_rational` keeps the fraction reduced
/// with a positive denominator, which is exactly the invariant we need.
pub type Rat = num_rational::BigRational;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
