//! Exact polynomial test functions in a concrete dimension `m`, and the
//! closed-form spherical-mean machinery used by the spherical pairing route.
//!
//! Polynomials stand in for compactly supported test functions: a pairing
//! with an origin-supported distribution only sees finitely many derivatives
//! at 0, so polynomial evaluation is exact and sufficient.

mod moments;
mod parse;
pub mod quadrature;
mod random;

pub use moments::{sphere_moment, spherical_mean0, spherical_mean1};
pub use parse::parse_poly;
pub use random::random_poly;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::symq::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("polynomial parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// Multivariate polynomial with exact rational coefficients in `dim`
/// concrete variables `x1..xdim`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(dim: usize) -> Self {
        MultiPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    /// The variable `x{j+1}` (0-based `j`).
    pub fn var(dim: usize, j: usize) -> Self {
        assert!(j < dim, "variable index out of range");
        let mut alpha = vec![0; dim];
        alpha[j] = 1;
        MultiPoly::monomial(dim, alpha, rat_int(1))
    }

    pub fn monomial(dim: usize, alpha: Vec<u32>, c: Rational) -> Self {
        assert_eq!(alpha.len(), dim, "multi-index length must equal dimension");
        let mut p = MultiPoly::zero(dim);
        p.add_term(alpha, c);
        p
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|a| a.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, alpha: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.dim);
        }
        MultiPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(a, k)| (a.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = MultiPoly::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let alpha: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(alpha, ca * cb);
            }
        }
        out
    }

    /// Exact partial derivative with respect to `x{j+1}`.
    pub fn partial(&self, j: usize) -> Self {
        assert!(j < self.dim);
        let mut out = MultiPoly::zero(self.dim);
        for (a, c) in &self.terms {
            if a[j] == 0 {
                continue;
            }
            let mut alpha = a.clone();
            alpha[j] -= 1;
            out.add_term(alpha, c * rat_int(a[j] as i64));
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        let mut out = MultiPoly::zero(self.dim);
        for j in 0..self.dim {
            out = out.add(&self.partial(j).partial(j));
        }
        out
    }

    /// Euler operator `sum_j x_j d/dx_j`; used by pairing cross-checks.
    pub fn euler(&self) -> Self {
        let mut out = MultiPoly::zero(self.dim);
        for (a, c) in &self.terms {
            let deg: u32 = a.iter().sum();
            out.add_term(a.clone(), c * rat_int(deg as i64));
        }
        out
    }

    pub fn value_at_zero(&self) -> Rational {
        self.terms
            .get(&vec![0; self.dim])
            .cloned()
            .unwrap_or_else(|| rat_int(0))
    }

    /// Multi-index JSON form `[[alpha...], "p/q"]` per term.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(a, c)| {
                    serde_json::json!([
                        a.iter().map(|&e| e as u64).collect::<Vec<_>>(),
                        c.to_string()
                    ])
                })
                .collect(),
        )
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut pieces = Vec::new();
            if !abs.is_one() || alpha.iter().all(|&e| e == 0) {
                pieces.push(abs.to_string());
            }
            for (j, &e) in alpha.iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(format!("x{}", j + 1)),
                    _ => pieces.push(format!("x{}^{}", j + 1, e)),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Vector-valued polynomial: `dim` components sharing one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorPoly {
    components: Vec<MultiPoly>,
}

impl VectorPoly {
    pub fn new(components: Vec<MultiPoly>) -> Self {
        assert!(!components.is_empty());
        let dim = components[0].dimension();
        assert!(components.iter().all(|p| p.dimension() == dim));
        VectorPoly { components }
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }
}

/// Componentwise gradient as a Clifford-vector-valued polynomial.
pub fn dirac_apply(phi: &MultiPoly) -> VectorPoly {
    VectorPoly::new((0..phi.dimension()).map(|j| phi.partial(j)).collect())
}

/// Value of the `n`-th Dirac power of `phi` at the origin.
///
/// Even `n` gives the scalar `((-Lap)^(n/2) phi)(0)`; odd `n` gives the
/// vector with components `(d_j (-Lap)^((n-1)/2) phi)(0)`.
pub fn dirac_power_at_zero(phi: &MultiPoly, n: usize) -> PairingValue {
    let mut psi = phi.clone();
    for _ in 0..n / 2 {
        psi = psi.laplacian().neg();
    }
    if n.is_multiple_of(2) {
        PairingValue::Scalar(psi.value_at_zero())
    } else {
        PairingValue::Vector(
            (0..phi.dimension())
                .map(|j| psi.partial(j).value_at_zero())
                .collect(),
        )
    }
}

/// Polynomial in the radial variable `r`, either scalar or vector valued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadialPoly {
    /// coefficient of `r^k` at index `k`
    Scalar(Vec<Rational>),
    /// per power of `r`, an `m`-component coefficient vector
    Vector(Vec<Vec<Rational>>),
}

impl RadialPoly {
    fn trim(mut self) -> Self {
        match &mut self {
            RadialPoly::Scalar(cs) => {
                while matches!(cs.last(), Some(c) if c.is_zero()) {
                    cs.pop();
                }
            }
            RadialPoly::Vector(cs) => {
                while matches!(cs.last(), Some(v) if v.iter().all(Zero::is_zero)) {
                    cs.pop();
                }
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RadialPoly::Scalar(cs) => cs.iter().all(Zero::is_zero),
            RadialPoly::Vector(cs) => cs.iter().all(|v| v.iter().all(Zero::is_zero)),
        }
    }

    /// Powers of `r` carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        match self {
            RadialPoly::Scalar(cs) => cs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, _)| k)
                .collect(),
            RadialPoly::Vector(cs) => cs
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.iter().all(Zero::is_zero))
                .map(|(k, _)| k)
                .collect(),
        }
    }

    /// `n! * (coefficient of r^n)`, exact.
    pub fn radial_deriv_at_zero(&self, n: usize) -> PairingValue {
        let fact: Rational = rat_int((1..=n as i64).product::<i64>().max(1));
        match self {
            RadialPoly::Scalar(cs) => {
                let c = cs.get(n).cloned().unwrap_or_else(|| rat_int(0));
                PairingValue::Scalar(c * fact)
            }
            RadialPoly::Vector(cs) => match cs.get(n) {
                Some(v) => PairingValue::Vector(v.iter().map(|c| c * &fact).collect()),
                None => {
                    let dim = cs.first().map(Vec::len).unwrap_or(0);
                    PairingValue::Vector(vec![rat_int(0); dim])
                }
            },
        }
    }
}

/// Exact result of a distributional pairing: a scalar, an `m`-component
/// vector, or (for mixed-parity inputs) both parts reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingValue {
    Scalar(Rational),
    Vector(Vec<Rational>),
    Mixed {
        scalar: Rational,
        vector: Vec<Rational>,
    },
}

impl PairingValue {
    pub fn zero() -> Self {
        PairingValue::Scalar(rat_int(0))
    }

    pub fn zero_vector(dim: usize) -> Self {
        PairingValue::Vector(vec![rat_int(0); dim])
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PairingValue::Scalar(s) => s.is_zero(),
            PairingValue::Vector(v) => v.iter().all(Zero::is_zero),
            PairingValue::Mixed { scalar, vector } => {
                scalar.is_zero() && vector.iter().all(Zero::is_zero)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        match self {
            PairingValue::Scalar(s) => PairingValue::Scalar(s * c),
            PairingValue::Vector(v) => PairingValue::Vector(v.iter().map(|x| x * c).collect()),
            PairingValue::Mixed { scalar, vector } => PairingValue::Mixed {
                scalar: scalar * c,
                vector: vector.iter().map(|x| x * c).collect(),
            },
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat_int(-1))
    }

    /// Kind-aware sum; scalar and vector parts accumulate separately.
    pub fn add(&self, other: &Self) -> Self {
        use PairingValue::*;
        let (s1, v1) = self.parts();
        let (s2, v2) = other.parts();
        let scalar = match (s1, s2) {
            (Some(a), Some(b)) => Some(a + b),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        };
        let vector = match (v1, v2) {
            (Some(a), Some(b)) => {
                assert_eq!(a.len(), b.len(), "vector pairing dimensions differ");
                Some(a.iter().zip(&b).map(|(x, y)| x + y).collect())
            }
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        };
        match (scalar, vector) {
            (Some(s), Some(v)) => Mixed {
                scalar: s,
                vector: v,
            },
            (Some(s), None) => Scalar(s),
            (None, Some(v)) => Vector(v),
            (None, None) => PairingValue::zero(),
        }
    }

    fn parts(&self) -> (Option<Rational>, Option<Vec<Rational>>) {
        match self {
            PairingValue::Scalar(s) => (Some(s.clone()), None),
            PairingValue::Vector(v) => (None, Some(v.clone())),
            PairingValue::Mixed { scalar, vector } => (Some(scalar.clone()), Some(vector.clone())),
        }
    }

    /// Drops identically-zero parts of a mixed value.
    pub fn normalized(self) -> Self {
        match self {
            PairingValue::Mixed { scalar, vector } => {
                let vzero = vector.iter().all(Zero::is_zero);
                if scalar.is_zero() && !vzero {
                    PairingValue::Vector(vector)
                } else if vzero && !scalar.is_zero() {
                    PairingValue::Scalar(scalar)
                } else if scalar.is_zero() && vzero {
                    PairingValue::zero()
                } else {
                    PairingValue::Mixed { scalar, vector }
                }
            }
            other => other,
        }
    }

    /// Exact agreement; zero values agree regardless of kind.
    pub fn agrees(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.clone().normalized() == other.clone().normalized()
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingValue::Scalar(s) => write!(f, "{s}"),
            PairingValue::Vector(v) => {
                let comps: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", comps.join(", "))
            }
            PairingValue::Mixed { scalar, vector } => {
                let comps: Vec<String> = vector.iter().map(|c| c.to_string()).collect();
                write!(f, "{scalar} + ({})", comps.join(", "))
            }
        }
    }
}

pub(crate) fn trim_radial(p: RadialPoly) -> RadialPoly {
    p.trim()
}
