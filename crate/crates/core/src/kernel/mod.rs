//! Canonical representation of distributions and signumdistributions
//! supported at the origin, and the rewrite rules for every operator
//! action defined on them.
//!
//! The canonical basis on the distribution side is `D^n delta` (powers of
//! the Dirac operator applied to delta); it is closed under all classical
//! operators with coefficient-only changes, so equality is decidable by
//! comparing coefficient tables. The signum side uses the omega-associate
//! basis `s[n]`, normalized by the pairing contract
//! `<s[n], omega phi> = -<D^n delta, phi>`.

mod radial;

pub use radial::{
    from_radial, prop35_coefficient, prop35_compose, radial_basis, Prop35Family, RadialForm,
    RadialLabel, RadialTerm,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::symq::{linear_product, odd_rising_coeff, DimScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),
    #[error("domain error: {0}")]
    DomainError(String),
}

fn unsupported(msg: impl Into<String>) -> KernelError {
    KernelError::UnsupportedAction(msg.into())
}

/// Which of the two functional spaces a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Dist,
    Sign,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Dist => write!(f, "DIST"),
            Space::Sign => write!(f, "SIGN"),
        }
    }
}

/// Scalar- or vector-valued, per basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Scalar,
    Vector,
}

/// `D^{2l} delta` is scalar valued, `D^{2l+1} delta` vector valued.
pub fn dist_kind(n: usize) -> Kind {
    if n.is_multiple_of(2) {
        Kind::Scalar
    } else {
        Kind::Vector
    }
}

/// The omega-associates carry the opposite kind: `s[0] = omega delta` is
/// vector valued, `s[1]` scalar valued.
pub fn signum_kind(n: usize) -> Kind {
    if n.is_multiple_of(2) {
        Kind::Vector
    } else {
        Kind::Scalar
    }
}

/// Shared coefficient table: basis index -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Terms(BTreeMap<usize, DimScalar>);

impl Terms {
    fn insert(&mut self, n: usize, c: DimScalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(n) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn map<F>(&self, f: F) -> Terms
    where
        F: Fn(usize, &DimScalar) -> Option<(usize, DimScalar)>,
    {
        let mut out = Terms::default();
        for (&n, c) in &self.0 {
            if let Some((n2, c2)) = f(n, c) {
                out.insert(n2, c2);
            }
        }
        out
    }

    fn scale(&self, c: &DimScalar) -> Terms {
        self.map(|n, k| Some((n, k * c)))
    }

    fn add(&self, other: &Terms) -> Terms {
        let mut out = self.clone();
        for (&n, c) in &other.0 {
            out.insert(n, c.clone());
        }
        out
    }
}

/// Finite linear combination of the canonical basis `D^n delta` with
/// `DimScalar` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Distribution {
    terms: Terms,
}

/// Finite linear combination of the omega-associate basis `s[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignumDistribution {
    terms: Terms,
}

macro_rules! common_table_api {
    ($ty:ident) => {
        impl $ty {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn basis(n: usize) -> Self {
                Self::term(n, DimScalar::one())
            }

            pub fn term(n: usize, c: DimScalar) -> Self {
                let mut terms = Terms::default();
                terms.insert(n, c);
                $ty { terms }
            }

            pub fn from_terms(items: impl IntoIterator<Item = (usize, DimScalar)>) -> Self {
                let mut terms = Terms::default();
                for (n, c) in items {
                    terms.insert(n, c);
                }
                $ty { terms }
            }

            pub fn is_zero(&self) -> bool {
                self.terms.0.is_empty()
            }

            pub fn terms(&self) -> impl Iterator<Item = (usize, &DimScalar)> {
                self.terms.0.iter().map(|(&n, c)| (n, c))
            }

            pub fn coeff(&self, n: usize) -> DimScalar {
                self.terms
                    .0
                    .get(&n)
                    .cloned()
                    .unwrap_or_else(DimScalar::zero)
            }

            pub fn max_index(&self) -> Option<usize> {
                self.terms.0.keys().next_back().copied()
            }

            pub fn scale(&self, c: &DimScalar) -> Self {
                $ty {
                    terms: self.terms.scale(c),
                }
            }
        }

        impl Add for &$ty {
            type Output = $ty;
            fn add(self, other: &$ty) -> $ty {
                $ty {
                    terms: self.terms.add(&other.terms),
                }
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, other: $ty) -> $ty {
                &self + &other
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.scale(&DimScalar::from_int(-1))
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, other: &$ty) -> $ty {
                self + &(-other)
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, other: $ty) -> $ty {
                &self - &other
            }
        }
    };
}

common_table_api!(Distribution);
common_table_api!(SignumDistribution);

impl Distribution {
    pub fn delta() -> Self {
        Distribution::basis(0)
    }

    /// True when every stored basis index is even (spherically symmetric).
    pub fn is_even_indexed(&self) -> bool {
        self.terms.0.keys().all(|n| n % 2 == 0)
    }

    /// Dirac operator: shifts every basis index up by one.
    pub fn apply_dirac(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| Some((n + 1, c.clone()))),
        }
    }

    /// Laplace operator `Lap = -D^2`.
    pub fn apply_laplace(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| Some((n + 2, -c))),
        }
    }

    /// Euler operator `E = r d_r`; each `n`-term is homogeneous of degree
    /// `-(m+n)` and scales accordingly.
    pub fn apply_euler(&self) -> Distribution {
        Distribution {
            terms: self
                .terms
                .map(|n, c| Some((n, -(c * DimScalar::m_plus(n as i64))))),
        }
    }

    /// Angular momentum operator: annihilates spherically symmetric
    /// elements; not defined on the vector-kind basis elements.
    pub fn apply_gamma(&self) -> Result<Distribution, KernelError> {
        if !self.is_even_indexed() {
            return Err(unsupported(
                "Gamma operator is only defined on spherically symmetric (even-index) elements",
            ));
        }
        Ok(Distribution::zero())
    }

    /// Laplace-Beltrami operator: same annihilation behaviour as Gamma.
    pub fn apply_laplace_beltrami(&self) -> Result<Distribution, KernelError> {
        if !self.is_even_indexed() {
            return Err(unsupported(
                "Laplace-Beltrami operator is only defined on even-index elements",
            ));
        }
        Ok(Distribution::zero())
    }

    /// Multiplication by the vector variable `x`:
    /// `x D^{2k} delta = 2k D^{2k-1} delta` (zero at `k = 0`) and
    /// `x D^{2k+1} delta = (m+2k) D^{2k} delta`.
    pub fn mul_x(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| {
                if n % 2 == 0 {
                    if n == 0 {
                        None
                    } else {
                        Some((n - 1, c * DimScalar::from_int(n as i64)))
                    }
                } else {
                    Some((n - 1, c * DimScalar::m_plus(n as i64 - 1)))
                }
            }),
        }
    }

    /// `p`-fold multiplication by `x`; terms whose order runs out map to
    /// zero, matching the vanishing factor in the closed-form identities.
    pub fn mul_x_pow(&self, p: u32) -> Distribution {
        let mut acc = self.clone();
        for _ in 0..p {
            acc = acc.mul_x();
        }
        acc
    }

    /// The operator `omega d_r`:
    /// `D^{2k} delta -> D^{2k+1} delta` and
    /// `D^{2k+1} delta -> (m+2k+1)/(2(k+1)) D^{2k+2} delta`.
    pub fn apply_omega_dr(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| Some((n + 1, c * omega_dr_factor(n)))),
        }
    }

    /// The operator `d_r^2`, acting within the distribution space.
    pub fn apply_dr2(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| {
                let k = n / 2;
                let factor = DimScalar::m_plus(2 * k as i64 + 1)
                    / DimScalar::from_int(2 * (k as i64 + 1));
                Some((n + 2, -(c * factor)))
            }),
        }
    }

    /// The operator `(1/r) d_r = 2 d_{r^2}`, defined on even-index terms:
    /// `D^{2k} delta -> 1/(2k+2) D^{2k+2} delta`.
    pub fn apply_inv_r_dr(&self) -> Result<Distribution, KernelError> {
        if !self.is_even_indexed() {
            return Err(unsupported(
                "(1/r) d_r on odd-index terms is not defined by the calculus",
            ));
        }
        Ok(Distribution {
            terms: self.terms.map(|n, c| {
                Some((n + 2, c / DimScalar::from_int(n as i64 + 2)))
            }),
        })
    }

    /// Division by the vector variable `x` (canonical rotation-invariant
    /// choice: all arbitrary delta terms fixed to zero):
    /// `D^{2k} delta -> 1/(m+2k) D^{2k+1} delta`,
    /// `D^{2k+1} delta -> 1/(2k+2) D^{2k+2} delta`.
    pub fn div_x(&self) -> Distribution {
        Distribution {
            terms: self.terms.map(|n, c| Some((n + 1, c / div_step_factor(n)))),
        }
    }

    /// Division by an odd power of `r`, landing in the signum space.
    ///
    /// `power = 1` acts on anything; higher odd powers are only defined on
    /// multiples of delta. Arbitrary terms are fixed to zero (canonical
    /// rotation-invariant choice).
    pub fn div_r(&self, power: u32) -> Result<SignumDistribution, KernelError> {
        if power.is_multiple_of(2) || power == 0 {
            return Err(unsupported(format!(
                "division by r^{power}: only odd positive powers are defined"
            )));
        }
        if power == 1 {
            return Ok(SignumDistribution {
                terms: self.terms.map(|n, c| Some((n + 1, c / div_step_factor(n)))),
            });
        }
        if self.max_index().unwrap_or(0) > 0 {
            return Err(unsupported(format!(
                "division by r^{power} is only defined on multiples of delta"
            )));
        }
        let k = (power as usize - 1) / 2;
        // (1/r^{2k+1}) delta = -(m-1)!/(m+2k)! d_r^{2k+1} delta,
        // expressed on the s-basis via d_r^{2k+1} delta = (-1)^{k+1} A_k s[2k+1]
        let falling = linear_product(0..=2 * k as i64);
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let conv = odd_rising_coeff(k) * DimScalar::from_int(sign);
        let c0 = self.coeff(0);
        Ok(SignumDistribution::term(2 * k + 1, c0 * conv / falling))
    }
}

/// Coefficient of the `omega d_r` step from index `n` to `n + 1`.
fn omega_dr_factor(n: usize) -> DimScalar {
    if n.is_multiple_of(2) {
        DimScalar::one()
    } else {
        DimScalar::m_plus(n as i64) / DimScalar::from_int(n as i64 + 1)
    }
}

/// Denominator of the `1/x` and `1/r` step rules from index `n`.
fn div_step_factor(n: usize) -> DimScalar {
    if n.is_multiple_of(2) {
        DimScalar::m_plus(n as i64)
    } else {
        DimScalar::from_int(n as i64 + 1)
    }
}

/// Coefficient magnitude of the `r`-action taking index `n` to `n - 1`
/// (`x`-rule coefficients; the sign differs per direction).
fn r_step_factor(n: usize) -> DimScalar {
    if n.is_multiple_of(2) {
        DimScalar::from_int(n as i64)
    } else {
        DimScalar::m_plus(n as i64 - 1)
    }
}

/// A distribution or a signumdistribution, tagged by space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralizedFunction {
    Dist(Distribution),
    Sign(SignumDistribution),
}

impl From<Distribution> for GeneralizedFunction {
    fn from(d: Distribution) -> Self {
        GeneralizedFunction::Dist(d)
    }
}

impl From<SignumDistribution> for GeneralizedFunction {
    fn from(s: SignumDistribution) -> Self {
        GeneralizedFunction::Sign(s)
    }
}

impl GeneralizedFunction {
    pub fn delta() -> Self {
        Distribution::delta().into()
    }

    pub fn zero(space: Space) -> Self {
        match space {
            Space::Dist => Distribution::zero().into(),
            Space::Sign => SignumDistribution::zero().into(),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            GeneralizedFunction::Dist(_) => Space::Dist,
            GeneralizedFunction::Sign(_) => Space::Sign,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GeneralizedFunction::Dist(d) => d.is_zero(),
            GeneralizedFunction::Sign(s) => s.is_zero(),
        }
    }

    pub fn as_dist(&self) -> Result<&Distribution, KernelError> {
        match self {
            GeneralizedFunction::Dist(d) => Ok(d),
            GeneralizedFunction::Sign(_) => Err(unsupported(
                "classical operator applied to a signumdistribution",
            )),
        }
    }

    pub fn as_sign(&self) -> Result<&SignumDistribution, KernelError> {
        match self {
            GeneralizedFunction::Sign(s) => Ok(s),
            GeneralizedFunction::Dist(_) => Err(unsupported(
                "signum-space value expected, found a distribution",
            )),
        }
    }

    pub fn scale(&self, c: &DimScalar) -> Self {
        match self {
            GeneralizedFunction::Dist(d) => d.scale(c).into(),
            GeneralizedFunction::Sign(s) => s.scale(c).into(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&DimScalar::from_int(-1))
    }

    /// Sum within one space; adding across spaces is not defined.
    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        match (self, other) {
            (GeneralizedFunction::Dist(a), GeneralizedFunction::Dist(b)) => Ok((a + b).into()),
            (GeneralizedFunction::Sign(a), GeneralizedFunction::Sign(b)) => Ok((a + b).into()),
            _ => Err(unsupported("cannot add across DIST and SIGN spaces")),
        }
    }

    /// Multiplication by `r`: toggles the space.
    ///
    /// On the canonical bases: `r D^n delta = -mu(n) s[n-1]` and
    /// `r s[n] = mu(n) D^{n-1} delta`, with `mu(2k) = 2k` (so
    /// `r delta = 0` and `r omega delta = 0`) and `mu(2k+1) = m+2k`.
    pub fn act_r(&self) -> GeneralizedFunction {
        match self {
            GeneralizedFunction::Dist(d) => GeneralizedFunction::Sign(SignumDistribution {
                terms: d.terms.map(|n, c| {
                    if n == 0 {
                        None
                    } else {
                        Some((n - 1, -(c * r_step_factor(n))))
                    }
                }),
            }),
            GeneralizedFunction::Sign(s) => GeneralizedFunction::Dist(Distribution {
                terms: s.terms.map(|n, c| {
                    if n == 0 {
                        None
                    } else {
                        Some((n - 1, c * r_step_factor(n)))
                    }
                }),
            }),
        }
    }

    /// Radial derivative `d_r`: toggles the space.
    ///
    /// On the canonical bases: `d_r D^n delta = -nu(n) s[n+1]` and
    /// `d_r s[n] = nu(n) D^{n+1} delta`, with `nu(n)` the `omega d_r`
    /// step coefficient.
    pub fn act_dr(&self) -> GeneralizedFunction {
        match self {
            GeneralizedFunction::Dist(d) => GeneralizedFunction::Sign(SignumDistribution {
                terms: d.terms.map(|n, c| Some((n + 1, -(c * omega_dr_factor(n))))),
            }),
            GeneralizedFunction::Sign(s) => GeneralizedFunction::Dist(Distribution {
                terms: s.terms.map(|n, c| Some((n + 1, c * omega_dr_factor(n)))),
            }),
        }
    }

    /// Multiplication by `omega`: toggles the space; applying it twice is
    /// multiplication by -1.
    ///
    /// On the canonical bases: `omega D^n delta = s[n]` and
    /// `omega s[n] = -D^n delta`.
    pub fn act_omega(&self) -> GeneralizedFunction {
        match self {
            GeneralizedFunction::Dist(d) => GeneralizedFunction::Sign(SignumDistribution {
                terms: d.terms.clone(),
            }),
            GeneralizedFunction::Sign(s) => GeneralizedFunction::Dist(Distribution {
                terms: s.terms.scale(&DimScalar::from_int(-1)),
            }),
        }
    }
}

/// Exact structural equality: same space tag and identical canonical
/// coefficient tables.
pub fn is_equal(a: &GeneralizedFunction, b: &GeneralizedFunction) -> bool {
    a == b
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn dist_basis_str(n: usize) -> String {
    match n {
        0 => "delta".to_string(),
        1 => "D delta".to_string(),
        _ => format!("D^{n} delta"),
    }
}

fn signum_basis_str(n: usize) -> String {
    format!("s[{n}]")
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &Terms,
    basis: impl Fn(usize) -> String,
) -> fmt::Result {
    if terms.0.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (&n, c) in &terms.0 {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        if mag.is_one() {
            write!(f, "{}", basis(n))?;
        } else {
            write!(f, "{} * {}", mag, basis(n))?;
        }
    }
    Ok(())
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, dist_basis_str)
    }
}

impl fmt::Display for SignumDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, signum_basis_str)
    }
}

impl fmt::Display for GeneralizedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralizedFunction::Dist(d) => write!(f, "{d}"),
            GeneralizedFunction::Sign(s) => write!(f, "{s}"),
        }
    }
}
