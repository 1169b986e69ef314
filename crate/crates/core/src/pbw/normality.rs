use alloc::collections::BTreeSet;
use alloc::vec;

use super::{AlgebraElement, Monomial};
use crate::conformal::solve_linear;
use crate::error::{Error, Result};
use crate::scalar::CycloNumber;

/// Scalars `(λ_u, λ_h, λ_d)` with `x·ν = λ_x·ν·x` for each generator `x`,
/// or `None` if `ν` is not q-central.
///
/// q-centrality implies normality but not conversely; see
/// [`normality_check`] for a weaker certificate.
pub fn q_commutation_check(
    nu: &AlgebraElement,
) -> Result<Option<(CycloNumber, CycloNumber, CycloNumber)>> {
    if nu.is_zero() {
        return Err(Error::ZeroElement);
    }
    let pres = nu.presentation();
    let mut out = vec![];
    for x in [AlgebraElement::u(pres), AlgebraElement::h(pres), AlgebraElement::d(pres)] {
        let left = x.multiply(nu)?;
        let right = nu.multiply(&x)?;
        // L is a domain, so ν·x ≠ 0; read λ off any one of its terms
        let (&m, c) = right.terms().iter().next().expect("domain");
        let lambda = left.coeff(m).try_div(c)?;
        if lambda.is_zero() || left != right.scale(&lambda) {
            return Ok(None);
        }
        out.push(lambda);
    }
    let mut it = out.into_iter();
    Ok(Some((
        it.next().expect("u"),
        it.next().expect("h"),
        it.next().expect("d"),
    )))
}

/// Pairs `(λ, μ)` with `x·ν = ν·(λ·x + μ)` and `λ ≠ 0`, for `x = u, h, d`.
///
/// Such a certificate shows `Lν = νL`, so `ν` is normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub u: (CycloNumber, CycloNumber),
    pub h: (CycloNumber, CycloNumber),
    pub d: (CycloNumber, CycloNumber),
}

pub fn normality_check(nu: &AlgebraElement) -> Result<Option<NormalityCertificate>> {
    if nu.is_zero() {
        return Err(Error::ZeroElement);
    }
    let pres = nu.presentation();
    let mut out = vec![];
    for x in [AlgebraElement::u(pres), AlgebraElement::h(pres), AlgebraElement::d(pres)] {
        let left = x.multiply(nu)?;
        let right = nu.multiply(&x)?;
        let keys: BTreeSet<Monomial> = left
            .terms()
            .keys()
            .chain(right.terms().keys())
            .chain(nu.terms().keys())
            .copied()
            .collect();
        let matrix = keys
            .iter()
            .map(|&m| vec![right.coeff(m), nu.coeff(m)])
            .collect();
        let rhs = keys.iter().map(|&m| left.coeff(m)).collect();
        let Some(sol) = solve_linear(matrix, rhs) else {
            return Ok(None);
        };
        let (lambda, mu) = (sol[0].clone(), sol[1].clone());
        let candidate = right.scale(&lambda).try_add(&nu.scale(&mu))?;
        if lambda.is_zero() || candidate != left {
            return Ok(None);
        }
        out.push((lambda, mu));
    }
    let mut it = out.into_iter();
    Ok(Some(NormalityCertificate {
        u: it.next().expect("u"),
        h: it.next().expect("h"),
        d: it.next().expect("d"),
    }))
}
