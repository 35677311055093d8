//! Normalized monomial moments over the unit sphere and the spherical
//! means they generate.

use num_traits::Zero;

use super::{trim_radial, MultiPoly, PolyError, RadialPoly};
use crate::symq::{rat_int, Rational};

/// Normalized sphere moment `(1/a_m) * integral over S^{m-1} of omega^alpha`.
///
/// Zero when any exponent is odd; otherwise
/// `prod_i (alpha_i - 1)!! / prod_{j=0}^{|alpha|/2 - 1} (m + 2j)`,
/// with `(-1)!! = 1` and empty products equal to 1.
pub fn sphere_moment(alpha: &[u32], m: u32) -> Result<Rational, PolyError> {
    if m < 2 {
        return Err(PolyError::Domain(format!(
            "sphere moments require dimension m >= 2, got {m}"
        )));
    }
    if alpha.len() != m as usize {
        return Err(PolyError::Domain(format!(
            "multi-index length {} does not match dimension {m}",
            alpha.len()
        )));
    }
    if alpha.iter().any(|&a| a % 2 == 1) {
        return Ok(rat_int(0));
    }
    let mut num = rat_int(1);
    for &a in alpha {
        num *= odd_double_factorial(a as i64 - 1);
    }
    let half: i64 = alpha.iter().map(|&a| a as i64).sum::<i64>() / 2;
    let mut den = rat_int(1);
    for j in 0..half {
        den *= rat_int(m as i64 + 2 * j);
    }
    Ok(num / den)
}

/// `n!!` for odd `n >= -1`.
fn odd_double_factorial(n: i64) -> Rational {
    let mut acc = rat_int(1);
    let mut k = n;
    while k >= 2 {
        acc *= rat_int(k);
        k -= 2;
    }
    acc
}

/// Spherical mean `Sigma^0[phi](r)`: an even polynomial in `r` with
/// `Sigma^0[phi](0) = phi(0)`.
pub fn spherical_mean0(phi: &MultiPoly) -> RadialPoly {
    let m = phi.dimension() as u32;
    let mut coeffs: Vec<Rational> = vec![rat_int(0); phi.total_degree() as usize + 1];
    for (alpha, c) in phi.terms() {
        let p: u32 = alpha.iter().sum();
        let moment = sphere_moment(alpha, m).expect("dimension >= 2 for spherical means");
        if !moment.is_zero() {
            coeffs[p as usize] += c * moment;
        }
    }
    trim_radial(RadialPoly::Scalar(coeffs))
}

/// Spherical mean of the second kind `Sigma^1[phi](r)`: component `i` is
/// the normalized mean of `omega_i * phi(r omega)`, an odd vector polynomial.
pub fn spherical_mean1(phi: &MultiPoly) -> RadialPoly {
    let dim = phi.dimension();
    let m = dim as u32;
    let mut coeffs: Vec<Vec<Rational>> =
        vec![vec![rat_int(0); dim]; phi.total_degree() as usize + 2];
    for (alpha, c) in phi.terms() {
        let p: u32 = alpha.iter().sum();
        for i in 0..dim {
            let mut shifted = alpha.clone();
            shifted[i] += 1;
            let moment = sphere_moment(&shifted, m).expect("dimension >= 2 for spherical means");
            if !moment.is_zero() {
                coeffs[p as usize][i] += c * moment;
            }
        }
    }
    trim_radial(RadialPoly::Vector(coeffs))
}
