//! Dense univariate polynomials in `h` over a cyclotomic field.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{CycloNumber, CyclotomicField};

/// A polynomial `a₀ + a₁h + … + a_n hⁿ` with trailing zeros stripped; the
/// zero polynomial has no coefficients and no degree.
///
/// Equality is by value, like [`CycloNumber`].
#[derive(Clone)]
pub struct Poly {
    field: Arc<CyclotomicField>,
    coeffs: Vec<CycloNumber>,
}

impl Poly {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::constant(CycloNumber::one(field))
    }

    /// The indeterminate `h`.
    pub fn h(field: &Arc<CyclotomicField>) -> Self {
        Self::monomial(CycloNumber::one(field), 1)
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·hᵉ`.
    pub fn monomial(c: CycloNumber, e: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![CycloNumber::zero(&field); e];
        coeffs.push(c);
        Self::from_coeffs(&field, coeffs)
    }

    /// # Panics
    ///
    /// Panics if a coefficient lives in a field of a different order.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<CycloNumber>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.ambient_order() == field.order()),
            "coefficient outside the ambient field"
        );
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// Small-integer constructor, lowest degree first.
    pub fn from_integers(field: &Arc<CyclotomicField>, coeffs: &[i64]) -> Self {
        let cs = coeffs
            .iter()
            .map(|&c| CycloNumber::from_integer(field, c))
            .collect();
        Self::from_coeffs(field, cs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycloNumber::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn ambient_order(&self) -> u32 {
        self.field.order()
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    /// Coefficient of `hⁱ` (zero past the degree).
    pub fn coeff(&self, i: usize) -> CycloNumber {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| CycloNumber::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Exactly one nonzero term; false for zero.
    pub fn is_monomial(&self) -> bool {
        self.support().len() == 1
    }

    /// Zero or of degree 0.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.field.order() == other.field.order() {
            Ok(())
        } else {
            Err(Error::AmbientOrderMismatch {
                left: self.field.order(),
                right: other.field.order(),
            })
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&CycloNumber, &CycloNumber) -> CycloNumber) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| op(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![CycloNumber::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::from_coeffs(&self.field, out))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &CycloNumber) -> CycloNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycloNumber::zero(&self.field), |acc, c| &(&acc * x) + c)
    }

    /// `p(a·h + b)`, expanded by Horner's rule.
    pub fn compose_affine(&self, a: &CycloNumber, b: &CycloNumber) -> Self {
        let lin = Self::from_coeffs(&self.field, vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(&self.field), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    /// `p(c·h)`: scales the coefficient of `hⁱ` by `cⁱ`.
    pub fn dilate(&self, c: &CycloNumber) -> Self {
        let mut power = CycloNumber::one(&self.field);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Whether `p` has a root other than `w` over the algebraic closure.
    ///
    /// No root finding: every root equals `w` exactly when `p(h + w)` is a
    /// single term `c·hᵐ` (a nonzero constant has no roots at all).
    pub fn has_root_other_than(&self, w: &CycloNumber) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let shifted = self.compose_affine(&CycloNumber::one(&self.field), w);
        Ok(!shifted.is_monomial())
    }

    /// Image in a field whose order is a multiple of this one.
    pub fn lift(&self, field: &Arc<CyclotomicField>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.lift(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    /// `p / hʲ`, assuming `hʲ` divides `p`.
    pub(crate) fn shift_down(&self, j: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(j).all(CycloNumber::is_zero));
        Self::from_coeffs(&self.field, self.coeffs.iter().skip(j).cloned().collect())
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$try(rhs).expect("polynomials must share an ambient order")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

/// `coefficient` formatted as a factor: bare if it is a single term,
/// parenthesised otherwise. Returns the sign separately for single terms.
fn coefficient_factor(c: &CycloNumber) -> (bool, String) {
    let text = format!("{c}");
    let terms = c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
    if terms == 1 {
        match text.strip_prefix('-') {
            Some(rest) => (true, String::from(rest)),
            None => (false, text),
        }
    } else {
        (false, format!("({text})"))
    }
}

impl fmt::Display for Poly {
    /// Highest degree first in the CLI polynomial grammar, for example
    /// `h^2 - 2*h + 1` or `(1 + zeta(4))*h`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, factor) = coefficient_factor(c);
            let power = match i {
                0 => String::new(),
                1 => String::from("h"),
                _ => format!("h^{i}"),
            };
            let body = match (i, factor.as_str()) {
                (0, _) => factor,
                (_, "1") => power,
                _ => format!("{factor}*{power}"),
            };
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[N={}]({})", self.field.order(), self)
    }
}
