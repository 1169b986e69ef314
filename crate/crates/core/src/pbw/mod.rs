//! Elements of `L(f, r, s, γ)` in the PBW basis `uⁱ hʲ dᵏ`.
//!
//! Products are reduced with closed forms for moving `h` and `d` leftwards
//! past powers of `u`:
//!
//! ```text
//! h·uⁱ = uⁱ·φⁱ(h),        d·p(h) = p(φ(h))·d,       φ(h) = r·h − γ,
//! d·uⁱ = sⁱ·uⁱ·d − uⁱ⁻¹·Qᵢ(h),   Qᵢ = Σ_{t<i} sᵗ·f(φ^{i−1−t}(h)).
//! ```

mod identities;
mod normality;
mod rep;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::conformal::lift_all;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{CycloNumber, CyclotomicField, MonomialScalar};

pub use identities::{check_power_identity, check_relations, z_element};
pub use normality::{normality_check, q_commutation_check, NormalityCertificate};
pub use rep::{v_lambda_rep, MatrixRep};

/// The parameters `(f, r, s, γ)` of one algebra, lifted to a common
/// cyclotomic field.
pub struct Presentation {
    f: Poly,
    r: MonomialScalar,
    s: MonomialScalar,
    gamma: CycloNumber,
    field: Arc<CyclotomicField>,
    r_c: CycloNumber,
    s_c: CycloNumber,
}

impl Presentation {
    pub fn new(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, gamma: &CycloNumber) -> Arc<Self> {
        let l = lift_all(f, r, s, gamma);
        Arc::new(Presentation {
            f: l.f,
            r: r.clone(),
            s: s.clone(),
            gamma: l.gamma,
            field: l.field,
            r_c: l.r,
            s_c: l.s,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn r(&self) -> &MonomialScalar {
        &self.r
    }

    pub fn s(&self) -> &MonomialScalar {
        &self.s
    }

    pub fn gamma(&self) -> &CycloNumber {
        &self.gamma
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// `r` as an element of the ambient field.
    pub fn r_value(&self) -> &CycloNumber {
        &self.r_c
    }

    /// `s` as an element of the ambient field.
    pub fn s_value(&self) -> &CycloNumber {
        &self.s_c
    }

    /// `φ(h) = r·h − γ`.
    fn phi(&self) -> Poly {
        Poly::from_coeffs(&self.field, alloc::vec![-&self.gamma, self.r_c.clone()])
    }

    /// `φ⁰(h), …, φⁿ(h)`.
    fn phi_powers(&self, n: u32) -> Vec<Poly> {
        let phi = self.phi();
        let mut out = alloc::vec![Poly::h(&self.field)];
        for _ in 0..n {
            let last = out.last().expect("nonempty");
            out.push(last.compose_affine(&self.r_c, &-&self.gamma));
        }
        debug_assert!(out.len() < 2 || out[1] == phi);
        out
    }

    /// `Q₀ = 0, Q₁, …, Qₙ` with `Qᵢ = s·Qᵢ₋₁ + f(φⁱ⁻¹(h))`.
    fn q_polys(&self, n: u32) -> Vec<Poly> {
        let phis = self.phi_powers(n);
        let mut out = alloc::vec![Poly::zero(&self.field)];
        for i in 1..=n as usize {
            let f_shift = compose(&self.f, &phis[i - 1]);
            let next = &out[i - 1].scale(&self.s_c) + &f_shift;
            out.push(next);
        }
        out
    }
}

/// `p(q(h))` by Horner's rule.
fn compose(p: &Poly, q: &Poly) -> Poly {
    p.coeffs()
        .iter()
        .rev()
        .fold(Poly::zero(p.field()), |acc, c| &(&acc * q) + &Poly::constant(c.clone()))
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f && self.r == other.r && self.s == other.s && self.gamma == other.gamma
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {}, {}, {})", self.f, self.r, self.s, self.gamma)
    }
}

/// Exponent triple `(i, j, k)` of the basis monomial `uⁱ hʲ dᵏ`.
pub type Monomial = (u32, u32, u32);

/// An element of `L` as a finite combination of PBW monomials. No zero
/// coefficients are stored, so the representation is canonical.
#[derive(Clone)]
pub struct AlgebraElement {
    pres: Arc<Presentation>,
    terms: BTreeMap<Monomial, CycloNumber>,
}

impl AlgebraElement {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        AlgebraElement {
            pres: pres.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `c·uⁱ hʲ dᵏ`; `c` is lifted into the ambient field.
    pub fn monomial(pres: &Arc<Presentation>, c: &CycloNumber, m: Monomial) -> Result<Self> {
        let mut out = Self::zero(pres);
        out.add_term(m, c.lift(&pres.field)?);
        Ok(out)
    }

    fn basis(pres: &Arc<Presentation>, m: Monomial) -> Self {
        let mut out = Self::zero(pres);
        out.add_term(m, CycloNumber::one(&pres.field));
        out
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::basis(pres, (0, 0, 0))
    }

    pub fn u(pres: &Arc<Presentation>) -> Self {
        Self::basis(pres, (1, 0, 0))
    }

    pub fn h(pres: &Arc<Presentation>) -> Self {
        Self::basis(pres, (0, 1, 0))
    }

    pub fn d(pres: &Arc<Presentation>) -> Self {
        Self::basis(pres, (0, 0, 1))
    }

    /// `p(h)`.
    pub fn from_h_poly(pres: &Arc<Presentation>, p: &Poly) -> Result<Self> {
        let p = p.lift(&pres.field)?;
        let mut out = Self::zero(pres);
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term((0, j as u32, 0), c.clone());
        }
        Ok(out)
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CycloNumber> {
        &self.terms
    }

    /// Coefficient of a basis monomial (zero if absent).
    pub fn coeff(&self, m: Monomial) -> CycloNumber {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(|| CycloNumber::zero(&self.pres.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: CycloNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || *self.pres == *other.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-CycloNumber::one(&self.pres.field))
    }

    /// Multiply by a scalar from the ambient field.
    pub fn scale(&self, c: &CycloNumber) -> Self {
        let mut out = Self::zero(&self.pres);
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        // left multiplication never raises the u-degree of `other`
        let ctx = Rewriter::new(&self.pres, other.max_u());
        let mut out = Self::zero(&self.pres);
        for (&(a, b, c), coef) in &self.terms {
            let mut y = other.clone();
            for _ in 0..c {
                y = ctx.left_d(&y);
            }
            y = ctx.left_h_pow(&y, b);
            for (&(i, j, k), x) in &y.terms {
                out.add_term((i + a, j, k), x * coef);
            }
        }
        Ok(out)
    }

    fn max_u(&self) -> u32 {
        self.terms.keys().map(|m| m.0).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.pres), |acc, _| {
            acc.multiply(self).expect("same presentation")
        })
    }

    /// The common value of `i − k` over all terms, or `None` if the element
    /// is not homogeneous.
    pub fn grading_degree(&self) -> Result<Option<i64>> {
        let mut degrees = self.terms.keys().map(|&(i, _, k)| i as i64 - k as i64);
        let first = degrees.next().ok_or(Error::ZeroElement)?;
        Ok(degrees.all(|d| d == first).then_some(first))
    }
}

/// Cached `φⁱ(h)` and `Qᵢ(h)` for one product computation.
struct Rewriter {
    pres: Arc<Presentation>,
    phis: Vec<Poly>,
    qs: Vec<Poly>,
}

impl Rewriter {
    fn new(pres: &Arc<Presentation>, max_u: u32) -> Self {
        Rewriter {
            pres: pres.clone(),
            phis: pres.phi_powers(max_u.max(1)),
            qs: pres.q_polys(max_u),
        }
    }

    /// `d · y`.
    fn left_d(&self, y: &AlgebraElement) -> AlgebraElement {
        let pres = &self.pres;
        let mut out = AlgebraElement::zero(pres);
        for (&(i, j, k), c) in &y.terms {
            // sⁱ·uⁱ·φ(h)ʲ·dᵏ⁺¹
            let lead = self.phis[1].pow(j).scale(&(c * &pres.s_c.pow(i as i64).expect("nonzero")));
            for (m, x) in lead.coeffs().iter().enumerate() {
                out.add_term((i, m as u32, k + 1), x.clone());
            }
            // −uⁱ⁻¹·Qᵢ(h)·hʲ·dᵏ
            if i > 0 {
                for (m, x) in self.qs[i as usize].coeffs().iter().enumerate() {
                    out.add_term((i - 1, m as u32 + j, k), -&(x * c));
                }
            }
        }
        out
    }

    /// `hᵇ · y`.
    fn left_h_pow(&self, y: &AlgebraElement, b: u32) -> AlgebraElement {
        if b == 0 {
            return y.clone();
        }
        let mut out = AlgebraElement::zero(&self.pres);
        for (&(i, j, k), c) in &y.terms {
            let p = self.phis[i as usize].pow(b);
            for (m, x) in p.coeffs().iter().enumerate() {
                out.add_term((i, m as u32 + j, k), x * c);
            }
        }
        out
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.check_same(other).is_ok() && self.terms == other.terms
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j, k), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (sym, e) in [("u", i), ("h", j), ("d", k)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{sym}")?,
                    _ => write!(f, "*{sym}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
