//! Rational functions of the symbolic dimension `m`, in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::{Rational, SymqError};

/// Exact rational function of `m`: the coefficient field for every rewrite
/// rule in the engine.
///
/// Canonical form: the polynomial gcd of numerator and denominator is
/// removed, the joint integer content of the pair is 1, and the denominator
/// has a positive leading coefficient. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimScalar {
    num: IntPoly,
    den: IntPoly,
}

/// The four field operations of `dimscalar_arith`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl DimScalar {
    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return DimScalar {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let joint = num.content().gcd(&den.content());
        if !joint.is_one() {
            num = num.div_int_exact(&joint);
            den = den.div_int_exact(&joint);
        }
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        DimScalar { num, den }
    }

    /// Builds `num/den`, normalizing; fails when `den` is the zero polynomial.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, SymqError> {
        if den.is_zero() {
            return Err(SymqError::DivisionByZero);
        }
        Ok(DimScalar::normalized(num, den))
    }

    pub fn from_poly(num: IntPoly) -> Self {
        DimScalar::normalized(num, IntPoly::one())
    }

    pub fn zero() -> Self {
        DimScalar::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        DimScalar::from_poly(IntPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        DimScalar::from_poly(IntPoly::constant(n))
    }

    /// `n/d` as a constant; `d` must be nonzero.
    pub fn from_frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "from_frac with zero denominator");
        DimScalar::normalized(IntPoly::constant(n), IntPoly::constant(d))
    }

    pub fn from_rational(r: &Rational) -> Self {
        DimScalar::normalized(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    /// The symbolic dimension `m` itself.
    pub fn m() -> Self {
        DimScalar::from_poly(IntPoly::var())
    }

    /// `m + c`.
    pub fn m_plus(c: i64) -> Self {
        DimScalar::from_poly(IntPoly::linear(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Sign of the leading numerator coefficient (the denominator is
    /// canonically positive).
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SymqError> {
        if other.is_zero() {
            return Err(SymqError::DivisionByZero);
        }
        Ok(DimScalar::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = DimScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a concrete dimension `m0 >= 1`.
    pub fn dim_eval(&self, m0: u32) -> Result<Rational, SymqError> {
        assert!(m0 >= 1, "dim_eval requires a positive dimension");
        let x = BigInt::from(m0);
        let den = self.den.eval(&x);
        if den.is_zero() {
            return Err(SymqError::PoleAtDimension(m0));
        }
        Ok(Rational::new(self.num.eval(&x), den))
    }
}

/// Dispatches one of the four exact field operations.
pub fn dimscalar_arith(a: &DimScalar, b: &DimScalar, op: ArithOp) -> Result<DimScalar, SymqError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// `A_k(m) = (m+1)(m+3)...(m+2k-1) / (2^k k!)`, the conversion constant
/// between radial-derivative and Dirac-power basis elements; `A_0 = 1`.
pub fn odd_rising_coeff(k: usize) -> DimScalar {
    let mut num = IntPoly::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        num = num.mul(&IntPoly::linear(2 * i as i64 - 1));
        den *= BigInt::from(2 * i);
    }
    DimScalar::normalized(num, IntPoly::constant(den))
}

/// Product of linear factors `(m + c)` over the given offsets.
pub fn linear_product(offsets: impl IntoIterator<Item = i64>) -> DimScalar {
    let mut p = IntPoly::one();
    for c in offsets {
        p = p.mul(&IntPoly::linear(c));
    }
    DimScalar::from_poly(p)
}

impl Add for &DimScalar {
    type Output = DimScalar;
    fn add(self, other: &DimScalar) -> DimScalar {
        DimScalar::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Sub for &DimScalar {
    type Output = DimScalar;
    fn sub(self, other: &DimScalar) -> DimScalar {
        DimScalar::normalized(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Mul for &DimScalar {
    type Output = DimScalar;
    fn mul(self, other: &DimScalar) -> DimScalar {
        DimScalar::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Neg for &DimScalar {
    type Output = DimScalar;
    fn neg(self) -> DimScalar {
        DimScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for DimScalar {
            type Output = DimScalar;
            fn $method(self, other: DimScalar) -> DimScalar {
                (&self).$method(&other)
            }
        }
        impl $trait<&DimScalar> for DimScalar {
            type Output = DimScalar;
            fn $method(self, other: &DimScalar) -> DimScalar {
                (&self).$method(other)
            }
        }
        impl $trait<DimScalar> for &DimScalar {
            type Output = DimScalar;
            fn $method(self, other: DimScalar) -> DimScalar {
                self.$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for DimScalar {
    type Output = DimScalar;
    fn neg(self) -> DimScalar {
        -&self
    }
}

impl Div for &DimScalar {
    type Output = DimScalar;
    /// Panics on division by zero; use `checked_div` when the divisor is
    /// not known to be nonzero.
    fn div(self, other: &DimScalar) -> DimScalar {
        self.checked_div(other).expect("division by zero DimScalar")
    }
}

forward_owned_binop!(Div, div);

// ---------------------------------------------------------------------------
// Rendering: "(m+1)*(m+3)/8" with explicit parentheses, parseable back by
// the expression parser.
// ---------------------------------------------------------------------------

fn dense_string(p: &IntPoly) -> String {
    let deg = p.degree().expect("dense_string of zero polynomial");
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let unit = abs.is_one();
        match k {
            0 => out.push_str(&abs.to_string()),
            _ => {
                if !unit {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push('m');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    out
}

/// Renders one side as (negative?, atom list); atoms multiply together.
fn side_pieces(p: &IntPoly) -> (bool, Vec<String>) {
    let (factors, rest) = p.split_linear_factors();
    let negative = rest.leading_coeff().is_negative();
    let rest = if negative { rest.neg() } else { rest };
    let mut pieces = Vec::new();
    if rest.is_constant() {
        let c = rest.coeff(0);
        if !c.is_one() || factors.is_empty() {
            pieces.push(c.to_string());
        }
    } else {
        let content = rest.content();
        let core = if content.is_one() {
            rest
        } else {
            pieces.push(content.to_string());
            rest.div_int_exact(&content)
        };
        pieces.push(format!("({})", dense_string(&core)));
    }
    for (c, mult) in factors {
        let base = match c.cmp(&0) {
            std::cmp::Ordering::Equal => "m".to_string(),
            std::cmp::Ordering::Greater => format!("(m+{c})"),
            std::cmp::Ordering::Less => format!("(m-{})", -c),
        };
        if mult > 1 {
            pieces.push(format!("{base}^{mult}"));
        } else {
            pieces.push(base);
        }
    }
    (negative, pieces)
}

impl fmt::Display for DimScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (neg, num_pieces) = side_pieces(&self.num);
        if neg {
            write!(f, "-")?;
        }
        if num_pieces.is_empty() {
            write!(f, "1")?;
        } else {
            write!(f, "{}", num_pieces.join("*"))?;
        }
        if !self.den.is_one() {
            let (dneg, den_pieces) = side_pieces(&self.den);
            debug_assert!(!dneg, "canonical denominator is positive");
            if den_pieces.len() == 1 {
                write!(f, "/{}", den_pieces[0])?;
            } else {
                write!(f, "/({})", den_pieces.join("*"))?;
            }
        }
        Ok(())
    }
}
