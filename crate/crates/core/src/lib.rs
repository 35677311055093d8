//! Symbolic calculus engine for radial operators (`r`, `d_r`, `omega`)
//! acting on the delta distribution in `R^m` and on the associated
//! signumdistributions, with an exact dual-route verification oracle.
//!
//! All coefficients are exact rational functions of the symbolic dimension
//! `m`; nothing in the rewrite path ever rounds. The `oracle` module checks
//! every rewrite rule by pairing both sides against polynomial test
//! functions at fixed integer dimensions, through two independent routes
//! (cartesian derivatives at the origin, and spherical means).

pub mod kernel;
pub mod oracle;
pub mod parser;
pub mod poly;
pub mod symq;

pub use kernel::{Distribution, GeneralizedFunction, KernelError, SignumDistribution, Space};
pub use poly::{MultiPoly, PairingValue};
pub use symq::{DimScalar, Rational};
