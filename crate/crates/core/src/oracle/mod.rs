//! Independent verification layer: evaluates distributional pairings by two
//! routes (cartesian derivatives at the origin, spherical means) at fixed
//! integer dimensions, and confirms every kernel rewrite rule.
//!
//! All oracle arithmetic is exact rational; agreement means literal
//! equality, never tolerance.

mod suites;

pub use suites::{
    run_suite, run_suite_by_name, SuiteConfig, SuiteEntry, SuiteName, SuiteReport, SuiteStatus,
};

pub use crate::poly::PairingValue;

use num_traits::One;
use thiserror::Error;

use crate::kernel::{Distribution, GeneralizedFunction, SignumDistribution};
use crate::poly::{
    dirac_power_at_zero, random_poly, spherical_mean0, spherical_mean1, MultiPoly,
};
use crate::symq::{rat_int, Rational, SymqError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("space mismatch: cannot compare DIST with SIGN")]
    SpaceMismatch,
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("test function has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error(transparent)]
    Symq(#[from] SymqError),
}

/// `C(l) = 2^{2l} l!/(2l)! * (m/2)(m/2+1)...(m/2+l-1)`, computed exactly
/// as a rising product (no gamma-function numerics).
pub fn c_constant(l: usize, m: u32) -> Rational {
    assert!(m >= 2, "spherical pairing requires m >= 2");
    let mut value = rat_int(1);
    for i in 1..=l as i64 {
        // 2^{2l} l!/(2l)! accumulated factorwise: 4i / ((2i)(2i-1)) = 2/(2i-1)
        value *= Rational::new(2.into(), (2 * i - 1).into());
    }
    let half_m = Rational::new(m.into(), 2.into());
    for i in 0..l as i64 {
        value *= &half_m + rat_int(i);
    }
    value
}

fn check_dimension(phi: &MultiPoly, m: u32) -> Result<(), OracleError> {
    if phi.dimension() as u32 != m {
        return Err(OracleError::DimensionMismatch {
            expected: m,
            found: phi.dimension() as u32,
        });
    }
    Ok(())
}

/// Pairing through cartesian derivatives at the origin:
/// `<D^n delta, phi> = (-1)^n {D^n phi}(0)`, summed over terms with the
/// coefficients evaluated at `m`.
pub fn pair_cartesian(
    t: &Distribution,
    phi: &MultiPoly,
    m: u32,
) -> Result<PairingValue, OracleError> {
    check_dimension(phi, m)?;
    let mut acc: Option<PairingValue> = None;
    for (n, c) in t.terms() {
        let mut weight = c.dim_eval(m)?;
        if n % 2 == 1 {
            weight = -weight;
        }
        let v = dirac_power_at_zero(phi, n).scale(&weight);
        acc = Some(match acc {
            None => v,
            Some(prev) => prev.add(&v),
        });
    }
    Ok(acc.map_or_else(PairingValue::zero, PairingValue::normalized))
}

/// Pairing through the spherical route:
/// even term `2l`: `(-1)^l C(l) {d_r^{2l} Sigma0[phi]}|_0`;
/// odd term `2l+1`: `(-1)^l C(l+1) * (-1) {d_r^{2l+1} Sigma1[phi]}|_0`.
pub fn pair_spherical(
    t: &Distribution,
    phi: &MultiPoly,
    m: u32,
) -> Result<PairingValue, OracleError> {
    check_dimension(phi, m)?;
    let mean0 = spherical_mean0(phi);
    let mean1 = spherical_mean1(phi);
    let mut acc: Option<PairingValue> = None;
    for (n, c) in t.terms() {
        let l = n / 2;
        let sign = if l % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        let contribution = if n % 2 == 0 {
            mean0
                .radial_deriv_at_zero(n)
                .scale(&(sign * c_constant(l, m)))
        } else {
            mean1
                .radial_deriv_at_zero(n)
                .scale(&(sign * c_constant(l + 1, m) * rat_int(-1)))
        };
        let v = contribution.scale(&c.dim_eval(m)?);
        acc = Some(match acc {
            None => v,
            Some(prev) => prev.add(&v),
        });
    }
    Ok(acc.map_or_else(PairingValue::zero, PairingValue::normalized))
}

/// Pairing of a signumdistribution against the test object `omega phi`
/// (the caller supplies `phi`): `<s[n], omega phi> = -<D^n delta, phi>`.
pub fn pair_signum(
    s: &SignumDistribution,
    phi: &MultiPoly,
    m: u32,
) -> Result<PairingValue, OracleError> {
    check_dimension(phi, m)?;
    let associated = Distribution::from_terms(s.terms().map(|(n, c)| (n, c.clone())));
    Ok(pair_cartesian(&associated, phi, m)?.neg())
}

/// Route selection for pairing a generalized function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Cartesian,
    Spherical,
}

/// Pairs a generalized function against `phi` (through `omega phi` when the
/// value lives in the signum space, where the route distinction is empty).
pub fn pair(
    g: &GeneralizedFunction,
    phi: &MultiPoly,
    m: u32,
    route: Route,
) -> Result<PairingValue, OracleError> {
    match g {
        GeneralizedFunction::Dist(d) => match route {
            Route::Cartesian => pair_cartesian(d, phi, m),
            Route::Spherical => pair_spherical(d, phi, m),
        },
        GeneralizedFunction::Sign(s) => pair_signum(s, phi, m),
    }
}

/// Shared randomized-trial configuration.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub dims: Vec<u32>,
    pub trials: usize,
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            dims: vec![2, 3, 5],
            trials: 25,
            max_degree: 8,
            seed: 0,
        }
    }
}

impl VerifyConfig {
    /// Deterministic per-trial seed derivation.
    pub fn trial_seed(&self, m: u32, trial: usize) -> u64 {
        self.seed
            .wrapping_mul(1_000_003)
            .wrapping_add(m as u64 * 1009 + trial as u64)
    }
}

/// Outcome of one identity check, with rendered sides for reporting.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Checks `lhs = rhs`: exact symbolic equality at transcendental `m`, plus
/// route-appropriate pairing agreement against random polynomials at every
/// configured dimension. For distribution inputs both the cartesian and the
/// spherical route are compared, on both sides.
pub fn verify_identity(
    lhs: &GeneralizedFunction,
    rhs: &GeneralizedFunction,
    cfg: &VerifyConfig,
) -> Result<IdentityOutcome, OracleError> {
    if lhs.space() != rhs.space() {
        return Err(OracleError::SpaceMismatch);
    }
    let lhs_str = lhs.to_string();
    let rhs_str = rhs.to_string();
    if lhs != rhs {
        return Ok(IdentityOutcome {
            pass: false,
            lhs: format!("{lhs_str} (symbolic)"),
            rhs: format!("{rhs_str} (symbolic)"),
        });
    }
    for &m in &cfg.dims {
        for trial in 0..cfg.trials {
            let phi = random_poly(m as usize, cfg.max_degree, cfg.trial_seed(m, trial));
            let routes: &[Route] = match lhs.space() {
                crate::kernel::Space::Dist => &[Route::Cartesian, Route::Spherical],
                crate::kernel::Space::Sign => &[Route::Cartesian],
            };
            let mut values = Vec::new();
            for &route in routes {
                values.push((route, pair(lhs, &phi, m, route)?, pair(rhs, &phi, m, route)?));
            }
            for (route, lv, rv) in &values {
                if !lv.agrees(rv) {
                    return Ok(IdentityOutcome {
                        pass: false,
                        lhs: format!("{lhs_str} -> {lv} ({route:?}, m={m}, trial={trial})"),
                        rhs: format!("{rhs_str} -> {rv} ({route:?}, m={m}, trial={trial})"),
                    });
                }
            }
            // dual-route agreement on the (equal) sides themselves
            if values.len() == 2 {
                let (_, cart, _) = &values[0];
                let (_, sph, _) = &values[1];
                if !cart.agrees(sph) {
                    return Ok(IdentityOutcome {
                        pass: false,
                        lhs: format!("{lhs_str} -> cartesian {cart} (m={m}, trial={trial})"),
                        rhs: format!("{lhs_str} -> spherical {sph} (m={m}, trial={trial})"),
                    });
                }
            }
        }
    }
    Ok(IdentityOutcome {
        pass: true,
        lhs: lhs_str,
        rhs: rhs_str,
    })
}

/// One-in-`m` falling coefficient `(m)(m+1)...(m+j-1)` evaluated exactly.
pub(crate) fn rising_from_m(j: usize, m: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j as i64 {
        acc *= rat_int(m as i64 + i);
    }
    acc
}
