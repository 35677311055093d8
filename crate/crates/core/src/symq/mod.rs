//! Exact arithmetic foundation: arbitrary-precision rationals and normalized
//! rational functions of the symbolic dimension `m`.
//!
//! Identities proved at symbolic `m` hold for every integer dimension at
//! once; `m` is treated as transcendental throughout. All values are
//! immutable after construction and safe to share across threads.

mod intpoly;
mod scalar;

pub use intpoly::IntPoly;
pub use scalar::{dimscalar_arith, linear_product, odd_rising_coeff, ArithOp, DimScalar};

use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for integer rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Convenience constructor for `n/d`; `d` must be nonzero.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymqError {
    #[error("division by the zero element")]
    DivisionByZero,
    #[error("denominator vanishes at dimension m = {0}")]
    PoleAtDimension(u32),
}
