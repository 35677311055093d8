//! Spherical-mean invariants on random polynomials: parity, value at the
//! origin, and exact compatibility with the Laplacian (the classical
//! Pizzetti consistency of the moment formula).

use num_traits::Zero;
use signumcalc_core::poly::{random_poly, spherical_mean0, spherical_mean1, RadialPoly};
use signumcalc_core::symq::{rat_int, Rational};

/// Applies `d^2/dr^2 + (m-1)(1/r) d/dr` to an even polynomial in `r`:
/// the `r^p` coefficient `c` contributes `c * p * (p + m - 2)` at `r^{p-2}`.
fn radial_laplacian(mean: &RadialPoly, m: u32) -> Vec<Rational> {
    let RadialPoly::Scalar(coeffs) = mean else {
        panic!("scalar mean expected");
    };
    let mut out = vec![rat_int(0); coeffs.len().saturating_sub(2).max(1)];
    for (p, c) in coeffs.iter().enumerate() {
        if p < 2 || c.is_zero() {
            continue;
        }
        let factor = rat_int(p as i64) * rat_int(p as i64 + m as i64 - 2);
        out[p - 2] += c * factor;
    }
    while matches!(out.last(), Some(c) if c.is_zero()) {
        out.pop();
    }
    out
}

fn scalar_coeffs(mean: &RadialPoly) -> Vec<Rational> {
    let RadialPoly::Scalar(coeffs) = mean else {
        panic!("scalar mean expected");
    };
    let mut out = coeffs.clone();
    while matches!(out.last(), Some(c) if c.is_zero()) {
        out.pop();
    }
    out
}

#[test]
fn laplacian_compatibility_is_exact() {
    for m in [2u32, 3, 5] {
        for seed in 0..40u64 {
            let phi = random_poly(m as usize, 8, 9000 + seed);
            let lhs = scalar_coeffs(&spherical_mean0(&phi.laplacian()));
            let rhs = radial_laplacian(&spherical_mean0(&phi), m);
            assert_eq!(lhs, rhs, "m={m}, seed={seed}, phi={phi}");
        }
    }
}

#[test]
fn mean_parity_on_random_polys() {
    for m in [2u32, 3, 4] {
        for seed in 0..40u64 {
            let phi = random_poly(m as usize, 8, 700 + seed);
            for p in spherical_mean0(&phi).support() {
                assert_eq!(p % 2, 0, "Sigma0 must be even, m={m} seed={seed}");
            }
            for p in spherical_mean1(&phi).support() {
                assert_eq!(p % 2, 1, "Sigma1 must be odd, m={m} seed={seed}");
            }
        }
    }
}

#[test]
fn mean0_at_origin_is_value_at_origin() {
    for m in [2u32, 3, 5] {
        for seed in 0..40u64 {
            let phi = random_poly(m as usize, 6, 80 + seed);
            let mean = spherical_mean0(&phi);
            let at_zero = match &mean {
                RadialPoly::Scalar(cs) => cs.first().cloned().unwrap_or_else(|| rat_int(0)),
                _ => unreachable!(),
            };
            assert_eq!(at_zero, phi.value_at_zero(), "m={m}, seed={seed}");
        }
    }
}
