//! Radial-derivative view of the canonical bases, and the closed-form
//! coefficient tables for products of `r`-powers with radial derivatives.
//!
//! The basis change uses `A_k = (m+1)(m+3)...(m+2k-1)/(2^k k!)`:
//!
//! - `d_r^{2k} delta        = (-1)^k     A_k D^{2k}   delta`
//! - `(omega d_r^{2k+1}) delta = (-1)^k  A_k D^{2k+1} delta`
//! - `(omega d_r^{2k}) delta   = (-1)^k  A_k s[2k]`
//! - `d_r^{2k+1} delta      = (-1)^{k+1} A_k s[2k+1]`

use std::fmt;
use std::str::FromStr;

use super::{
    Distribution, GeneralizedFunction, KernelError, SignumDistribution, Space,
};
use crate::symq::{linear_product, odd_rising_coeff, DimScalar};

/// The four radial-form basis families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialLabel {
    /// `d_r^{2k} delta` — scalar distribution
    D,
    /// `(omega d_r^{2k+1}) delta` — vector distribution
    V,
    /// `d_r^{2k+1} delta` — scalar signumdistribution
    Sd,
    /// `(omega d_r^{2k}) delta` — vector signumdistribution
    Sv,
}

impl RadialLabel {
    pub fn space(self) -> Space {
        match self {
            RadialLabel::D | RadialLabel::V => Space::Dist,
            RadialLabel::Sd | RadialLabel::Sv => Space::Sign,
        }
    }

    /// Order of the radial derivative in the name, given the index `k`.
    pub fn order(self, k: usize) -> usize {
        match self {
            RadialLabel::D | RadialLabel::Sv => 2 * k,
            RadialLabel::V | RadialLabel::Sd => 2 * k + 1,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            RadialLabel::D => "d",
            RadialLabel::V => "v",
            RadialLabel::Sd => "sd",
            RadialLabel::Sv => "sv",
        }
    }
}

/// One radial-form term: `coeff *` the labelled basis element of index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialTerm {
    pub label: RadialLabel,
    pub k: usize,
    pub coeff: DimScalar,
}

/// A generalized function expressed over the radial-derivative families
/// of one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialForm {
    space: Space,
    terms: Vec<RadialTerm>,
}

impl RadialForm {
    pub fn new(space: Space, terms: Vec<RadialTerm>) -> Self {
        debug_assert!(terms.iter().all(|t| t.label.space() == space));
        RadialForm { space, terms }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &[RadialTerm] {
        &self.terms
    }
}

fn radial_basis_str(label: RadialLabel, k: usize) -> String {
    let order = label.order(k);
    match label {
        RadialLabel::D => match order {
            0 => "delta".to_string(),
            _ => format!("dr^{order} delta"),
        },
        RadialLabel::Sd => match order {
            1 => "dr delta".to_string(),
            _ => format!("dr^{order} delta"),
        },
        RadialLabel::V => match order {
            1 => "w dr delta".to_string(),
            _ => format!("w dr^{order} delta"),
        },
        RadialLabel::Sv => match order {
            0 => "w delta".to_string(),
            _ => format!("w dr^{order} delta"),
        },
    }
}

/// The radial-operator notation, e.g. `-(m+1) * dr delta`; this is the
/// friendly alias rendering for signum values.
impl fmt::Display for RadialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            let neg = t.coeff.is_negative();
            let mag = t.coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let basis = radial_basis_str(t.label, t.k);
            if mag.is_one() {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{mag} * {basis}")?;
            }
        }
        Ok(())
    }
}

impl GeneralizedFunction {
    /// Exact change of basis into the radial families.
    pub fn to_radial(&self) -> RadialForm {
        let mut terms = Vec::new();
        match self {
            GeneralizedFunction::Dist(d) => {
                for (n, c) in d.terms() {
                    let k = n / 2;
                    let label = if n % 2 == 0 { RadialLabel::D } else { RadialLabel::V };
                    terms.push(RadialTerm {
                        label,
                        k,
                        coeff: c * &inverse_conversion(label, k),
                    });
                }
                RadialForm::new(Space::Dist, terms)
            }
            GeneralizedFunction::Sign(s) => {
                for (n, c) in s.terms() {
                    let k = n / 2;
                    let label = if n % 2 == 0 { RadialLabel::Sv } else { RadialLabel::Sd };
                    terms.push(RadialTerm {
                        label,
                        k,
                        coeff: c * &inverse_conversion(label, k),
                    });
                }
                RadialForm::new(Space::Sign, terms)
            }
        }
    }
}

/// Conversion constant from the radial element `(label, k)` to its
/// canonical basis element (the coefficient in front of `D^n delta` or
/// `s[n]`).
fn conversion(label: RadialLabel, k: usize) -> DimScalar {
    let ak = odd_rising_coeff(k);
    let sign = match label {
        RadialLabel::D | RadialLabel::V | RadialLabel::Sv => {
            if k.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        RadialLabel::Sd => {
            if k.is_multiple_of(2) {
                -1
            } else {
                1
            }
        }
    };
    ak * DimScalar::from_int(sign)
}

fn inverse_conversion(label: RadialLabel, k: usize) -> DimScalar {
    DimScalar::one() / conversion(label, k)
}

/// Inverse basis change; `from_radial(to_radial(g)) == g`.
pub fn from_radial(form: &RadialForm) -> GeneralizedFunction {
    match form.space() {
        Space::Dist => {
            let mut acc = Distribution::zero();
            for t in form.terms() {
                let n = t.label.order(t.k);
                acc = &acc + &Distribution::term(n, &t.coeff * &conversion(t.label, t.k));
            }
            acc.into()
        }
        Space::Sign => {
            let mut acc = SignumDistribution::zero();
            for t in form.terms() {
                let n = t.label.order(t.k);
                acc = &acc + &SignumDistribution::term(n, &t.coeff * &conversion(t.label, t.k));
            }
            acc.into()
        }
    }
}

/// The radial basis element `(label, k)` with unit coefficient, e.g.
/// `radial_basis(RadialLabel::D, 1)` is the distribution `d_r^2 delta`.
pub fn radial_basis(label: RadialLabel, k: usize) -> GeneralizedFunction {
    from_radial(&RadialForm::new(
        label.space(),
        vec![RadialTerm {
            label,
            k,
            coeff: DimScalar::one(),
        }],
    ))
}

/// The four closed-form families for `r`-power times radial-derivative
/// products of delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop35Family {
    /// `r^{2l} d_r^{2k} delta`
    I,
    /// `omega r^{2l+1} d_r^{2k} delta`
    II,
    /// `omega r^{2l} d_r^{2k+1} delta`
    III,
    /// `r^{2l+1} d_r^{2k+1} delta`
    IV,
}

impl Prop35Family {
    pub const ALL: [Prop35Family; 4] = [
        Prop35Family::I,
        Prop35Family::II,
        Prop35Family::III,
        Prop35Family::IV,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Prop35Family::I => "i",
            Prop35Family::II => "ii",
            Prop35Family::III => "iii",
            Prop35Family::IV => "iv",
        }
    }

    /// Human-readable operator expression for table output.
    pub fn describe(self, k: usize, l: usize) -> String {
        match self {
            Prop35Family::I => format!("r^{} dr^{} delta", 2 * l, 2 * k),
            Prop35Family::II => format!("w r^{} dr^{} delta", 2 * l + 1, 2 * k),
            Prop35Family::III => format!("w r^{} dr^{} delta", 2 * l, 2 * k + 1),
            Prop35Family::IV => format!("r^{} dr^{} delta", 2 * l + 1, 2 * k + 1),
        }
    }
}

impl FromStr for Prop35Family {
    type Err = KernelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" => Ok(Prop35Family::I),
            "ii" => Ok(Prop35Family::II),
            "iii" => Ok(Prop35Family::III),
            "iv" => Ok(Prop35Family::IV),
            other => Err(KernelError::DomainError(format!(
                "unknown family '{other}', expected one of i, ii, iii, iv"
            ))),
        }
    }
}

impl fmt::Display for Prop35Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

fn pow2_factorial(j: usize) -> DimScalar {
    let mut acc: i64 = 1;
    for i in 1..=j as i64 {
        acc *= 2 * i;
    }
    DimScalar::from_int(acc)
}

fn sign(s: usize) -> DimScalar {
    DimScalar::from_int(if s.is_multiple_of(2) { 1 } else { -1 })
}

/// Literal closed-form coefficient and target Dirac index for the family
/// formulas, with `k >= l >= 0`. A vanishing combination returns the zero
/// coefficient with target index 0.
pub fn prop35_coefficient(
    family: Prop35Family,
    k: usize,
    l: usize,
) -> Result<(DimScalar, usize), KernelError> {
    if k < l {
        return Err(KernelError::DomainError(format!(
            "family {family} requires k >= l, got k={k}, l={l}"
        )));
    }
    let odd_block = linear_product((1..=k).map(|j| 2 * j as i64 - 1)); // (m+1)(m+3)...(m+2k-1)
    let (coeff, target) = match family {
        Prop35Family::I => {
            let even_block = linear_product((1..=l).map(|i| 2 * (k - i) as i64)); // (m+2k-2)...(m+2k-2l)
            (
                sign(k + l) * odd_block * even_block / pow2_factorial(k - l),
                2 * (k - l),
            )
        }
        Prop35Family::II => {
            if k == l {
                return Ok((DimScalar::zero(), 0));
            }
            let even_block = linear_product((1..=l).map(|i| 2 * (k - i) as i64));
            (
                sign(k + l) * odd_block * even_block / pow2_factorial(k - l - 1),
                2 * (k - l) - 1,
            )
        }
        Prop35Family::III => {
            let even_block = linear_product((0..l).map(|i| 2 * (k - i) as i64)); // (m+2k)...(m+2k-2l+2)
            (
                sign(k + l) * odd_block * even_block / pow2_factorial(k - l),
                2 * (k - l) + 1,
            )
        }
        Prop35Family::IV => {
            let even_block = linear_product((0..=l).map(|i| 2 * (k - i) as i64)); // (m+2k)...(m+2k-2l)
            (
                sign(k + l + 1) * odd_block * even_block / pow2_factorial(k - l),
                2 * (k - l),
            )
        }
    };
    Ok((coeff, target))
}

/// Engine-composed route for the same products: repeated `r`-actions on
/// the radial basis element, with a final `omega` for the vector families.
pub fn prop35_compose(
    family: Prop35Family,
    k: usize,
    l: usize,
) -> Result<GeneralizedFunction, KernelError> {
    if k < l {
        return Err(KernelError::DomainError(format!(
            "family {family} requires k >= l, got k={k}, l={l}"
        )));
    }
    let (start, r_steps, final_omega) = match family {
        Prop35Family::I => (radial_basis(RadialLabel::D, k), 2 * l, false),
        Prop35Family::II => (radial_basis(RadialLabel::D, k), 2 * l + 1, true),
        Prop35Family::III => (radial_basis(RadialLabel::Sd, k), 2 * l, true),
        Prop35Family::IV => (radial_basis(RadialLabel::Sd, k), 2 * l + 1, false),
    };
    let mut acc = start;
    for _ in 0..r_steps {
        acc = acc.act_r();
    }
    if final_omega {
        acc = acc.act_omega();
    }
    Ok(acc)
}
