//! Deterministic random polynomial generation for property tests and
//! verification trials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MultiPoly;
use crate::symq::rat_int;

/// Deterministic random polynomial: fixed `(m, max_degree, seed)` always
/// yields the same value. Coefficients are nonzero integers in `[-9, 9]`.
pub fn random_poly(m: usize, max_degree: u32, seed: u64) -> MultiPoly {
    assert!(m >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_terms = rng.gen_range(1..=6);
    let mut poly = MultiPoly::zero(m);
    for _ in 0..n_terms {
        let degree = rng.gen_range(0..=max_degree);
        let mut alpha = vec![0u32; m];
        for _ in 0..degree {
            alpha[rng.gen_range(0..m)] += 1;
        }
        let magnitude: i64 = rng.gen_range(1..=9);
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        poly = poly.add(&MultiPoly::monomial(m, alpha, rat_int(sign * magnitude)));
    }
    if poly.is_zero() {
        // terms cancelled; keep the output usable for pairing trials
        return MultiPoly::constant(m, rat_int(1));
    }
    poly
}
