//! Floating-point quadrature cross-checks for the sphere-moment formula.
//!
//! This is the one place in the crate where floating point appears: the
//! closed-form moments are validated against direct numerical integration
//! (trapezoid rule on the circle for m = 2, product Gauss-Legendre x
//! trapezoid for m = 3). Everything downstream of the moments stays exact.

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_deriv(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Legendre polynomial `P_n(x)` and its derivative via the three-term
/// recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Normalized circle moment `(1/2pi) int_0^{2pi} cos^a sin^b` by the
/// trapezoid rule, exact for trig polynomials of degree < `n_points`.
pub fn circle_moment_numeric(alpha: &[u32], n_points: usize) -> f64 {
    assert_eq!(alpha.len(), 2);
    let mut acc = 0.0;
    for k in 0..n_points {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n_points as f64;
        acc += theta.cos().powi(alpha[0] as i32) * theta.sin().powi(alpha[1] as i32);
    }
    acc / n_points as f64
}

/// Normalized moment over `S^2` by product quadrature: Gauss-Legendre in
/// `u = cos(theta)`, trapezoid in the azimuth.
pub fn sphere3_moment_numeric(alpha: &[u32], n_gauss: usize, n_azimuthal: usize) -> f64 {
    assert_eq!(alpha.len(), 3);
    let nodes = gauss_legendre(n_gauss);
    let mut acc = 0.0;
    for &(u, w) in &nodes {
        let s = (1.0 - u * u).max(0.0).sqrt();
        let mut ring = 0.0;
        for k in 0..n_azimuthal {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / n_azimuthal as f64;
            let w1 = s * phi.cos();
            let w2 = s * phi.sin();
            ring += w1.powi(alpha[0] as i32) * w2.powi(alpha[1] as i32) * u.powi(alpha[2] as i32);
        }
        acc += w * ring / n_azimuthal as f64;
    }
    // the u-integral contributes 1/2 of the normalized surface measure
    acc / 2.0
}
