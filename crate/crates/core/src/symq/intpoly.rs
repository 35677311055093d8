//! Dense integer-coefficient polynomials in the symbolic dimension `m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in one indeterminate with `BigInt` coefficients, stored dense
/// by ascending degree with no trailing zeros (the zero polynomial is the
/// empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            IntPoly::zero()
        } else {
            IntPoly { coeffs: vec![c] }
        }
    }

    /// The indeterminate `m`.
    pub fn var() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `m + c`.
    pub fn linear(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        IntPoly {
            coeffs: vec![c, BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// GCD of all coefficients, always non-negative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content, preserving the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division by a `BigInt`, which must divide every coefficient.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    /// Exact polynomial division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let mut rem = self.clone();
        let dd = other.degree().unwrap();
        let lc = other.leading_coeff();
        let Some(dn) = rem.degree() else {
            return Some(IntPoly::zero());
        };
        if dn < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        while let Some(d) = rem.degree() {
            if d < dd {
                return None;
            }
            let (q, r) = rem.leading_coeff().div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            quot[d - dd] = q.clone();
            let mut sub = vec![BigInt::zero(); d - dd];
            sub.extend(other.coeffs.iter().map(|c| c * &q));
            rem = rem.sub(&IntPoly::from_coeffs(sub));
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `other` (classic `lc^k`-scaled remainder).
    fn pseudo_rem(&self, other: &Self) -> Self {
        let dd = other.degree().expect("pseudo_rem by zero polynomial");
        let lc = other.leading_coeff();
        let mut rem = self.clone();
        while let Some(d) = rem.degree() {
            if d < dd {
                break;
            }
            let top = rem.leading_coeff();
            let mut sub = vec![BigInt::zero(); d - dd];
            sub.extend(other.coeffs.iter().map(|c| c * &top));
            rem = rem.mul_int(&lc).sub(&IntPoly::from_coeffs(sub));
        }
        rem
    }

    /// Primitive polynomial GCD (positive leading coefficient; content 1).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_gcd(other.clone());
        }
        if other.is_zero() {
            return normalize_gcd(self.clone());
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        normalize_gcd(a)
    }

    /// Extracts monic linear factors `(m + c)` with small integer `c`.
    ///
    /// Returns `(factors, rest)` where `factors` maps each `c` to its
    /// multiplicity and `rest` carries whatever does not split this way.
    /// Used for display only; canonical form stays dense.
    pub fn split_linear_factors(&self) -> (Vec<(i64, u32)>, IntPoly) {
        let mut rest = self.clone();
        let mut factors: Vec<(i64, u32)> = Vec::new();
        if rest.is_constant() {
            return (factors, rest);
        }
        for c in -64i64..=64 {
            let root = BigInt::from(-c);
            let lin = IntPoly::linear(c);
            let mut mult = 0u32;
            while !rest.is_constant() && rest.eval(&root).is_zero() {
                match rest.div_exact(&lin) {
                    Some(q) => {
                        rest = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                factors.push((c, mult));
            }
        }
        factors.sort();
        (factors, rest)
    }
}

fn normalize_gcd(p: IntPoly) -> IntPoly {
    if p.is_zero() {
        return p;
    }
    let pp = p.primitive_part();
    if pp.leading_coeff().is_negative() {
        pp.neg()
    } else {
        pp
    }
}
