use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{classify, Classification, Verdict};
use crate::error::{Error, Result};
use crate::pbw::Presentation;
use crate::poly::Poly;
use crate::scalar::{CycloNumber, CyclotomicField, MonomialScalar, Rational};

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| Some(n.sqrt()).filter(|m| m * m == *n);
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// The roots `r, s` of `x² − αx − β` as monomial scalars.
///
/// A root `q·ζ` that is quadratic over `ℚ(ζ_N)` has `ζ` inside
/// `ℚ(ζ_{12N})`, so the search runs over the powers `ζ^k` there. For each
/// `k`, `q` must satisfy `q² − αζ⁻ᵏ·q − βζ⁻²ᵏ = 0` coordinatewise, which pins
/// it down from a linear coordinate or from the rational part.
///
/// The pair is ordered with the larger modulus `|r|` first, then the smaller
/// argument.
pub fn downup_roots(alpha: &CycloNumber, beta: &CycloNumber) -> Result<(MonomialScalar, MonomialScalar)> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let base = CyclotomicField::common([alpha.ambient_order(), beta.ambient_order()]);
    let field = CyclotomicField::new(12 * base.order());
    let alpha = alpha.lift(&field)?;
    let beta = beta.lift(&field)?;
    let m = field.order() as i64;
    for k in 0..m {
        let z = CycloNumber::zeta_power(&field, -k);
        let a = &alpha * &z;
        let b = &(&beta * &z) * &z;
        let coord = |x: &CycloNumber, i: usize| x.coeffs().get(i).cloned().unwrap_or_else(Rational::zero);
        let linear = (1..field.degree()).find(|&i| !coord(&a, i).is_zero());
        let candidates: alloc::vec::Vec<Rational> = match linear {
            Some(i) => alloc::vec![-coord(&b, i) / coord(&a, i)],
            None => {
                let (a0, b0) = (coord(&a, 0), coord(&b, 0));
                let two = Rational::from_integer(2.into());
                match rational_sqrt(&(&a0 * &a0 + &b0 * Rational::from_integer(4.into()))) {
                    Some(d) => alloc::vec![(&a0 - &d) / &two, (&a0 + &d) / two],
                    None => alloc::vec![],
                }
            }
        };
        for q in candidates.into_iter().filter(Rational::is_positive) {
            let r = MonomialScalar::new(q, field.order(), k)?;
            let rc = r.to_cyclo(&field)?;
            if !(&(&rc * &rc) - &(&alpha * &rc) - beta.clone()).is_zero() {
                continue;
            }
            let sc = (-&beta).try_div(&rc)?;
            let s = sc.as_monomial().ok_or(Error::RootsNotRepresentable)?;
            // larger modulus first, then smaller angle
            let key = |x: &MonomialScalar| {
                (core::cmp::Reverse(x.q().clone()), Rational::new(x.root_exponent().into(), x.root_order().into()))
            };
            return Ok(if key(&s) < key(&r) { (s, r) } else { (r, s) });
        }
    }
    Err(Error::RootsNotRepresentable)
}

/// The down-up algebra `A(α, β, γ) ≅ L(h, r, s, γ)` where `r, s` are the
/// roots of `x² − αx − β`.
pub fn classify_downup(alpha: &CycloNumber, beta: &CycloNumber, gamma: &CycloNumber) -> Result<Classification> {
    let (r, s) = downup_roots(alpha, beta)?;
    Ok(classify_downup_roots(&r, &s, gamma))
}

/// [`classify_downup`] with the roots supplied directly.
pub fn classify_downup_roots(r: &MonomialScalar, s: &MonomialScalar, gamma: &CycloNumber) -> Classification {
    classify(&Presentation::new(&Poly::h(gamma.field()), r, s, gamma))
}

/// The Smith algebra `S(f) ≅ L(f, 1, 1, 1)`, which is always a UFD.
///
/// # Panics
///
/// Panics if the classifier disagrees, since that would be a bug.
pub fn classify_smith(f: &Poly) -> Classification {
    let one = MonomialScalar::one();
    let c = classify(&Presentation::new(f, &one, &one, &CycloNumber::one(f.field())));
    assert_eq!(c.verdict, Verdict::Ufd, "Smith algebra S({f}) must be a UFD");
    c
}
