use alloc::format;
use alloc::sync::Arc;

use super::{AlgebraElement, Presentation};
use crate::conformal::{conformal_witness, p_k};
use crate::error::{Error, Result};

/// The three defining relations, checked as identities between normal
/// forms of products:
/// `dh − r·hd + γ·d`, `hu − r·uh + γ·u` and `du − s·ud + f(h)` all vanish.
pub fn check_relations(pres: &Arc<Presentation>) -> bool {
    let (u, h, d) = (AlgebraElement::u(pres), AlgebraElement::h(pres), AlgebraElement::d(pres));
    let mul = |a: &AlgebraElement, b: &AlgebraElement| a.multiply(b).expect("same presentation");
    let r = pres.r_value();
    let s = pres.s_value();
    let gamma = pres.gamma();
    let f = AlgebraElement::from_h_poly(pres, pres.f()).expect("ambient field");
    let rel1 = mul(&d, &h)
        .try_sub(&mul(&h, &d).scale(r))
        .and_then(|x| x.try_add(&d.scale(gamma)));
    let rel2 = mul(&h, &u)
        .try_sub(&mul(&u, &h).scale(r))
        .and_then(|x| x.try_add(&u.scale(gamma)));
    let rel3 = mul(&d, &u)
        .try_sub(&mul(&u, &d).scale(s))
        .and_then(|x| x.try_add(&f));
    [rel1, rel2, rel3]
        .into_iter()
        .all(|x| x.is_ok_and(|x| x.is_zero()))
}

/// `d·uᵏ = sᵏ·uᵏ·d − P_k(h)·uᵏ⁻¹` in `L(f, r, s, 0)`, comparing the normal
/// form of the left side with `P_k` obtained by summation.
pub fn check_power_identity(pres: &Arc<Presentation>, k: u32) -> Result<bool> {
    if !pres.gamma().is_zero() {
        return Err(Error::NotApplicable(format!(
            "the d*u^k identity is stated for gamma = 0, got {}",
            pres.gamma()
        )));
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be positive".into()));
    }
    let u = AlgebraElement::u(pres);
    let uk = u.pow(k);
    let lhs = AlgebraElement::d(pres).multiply(&uk)?;
    let pk = p_k(pres.f(), pres.r(), pres.s(), k).p_k;
    let s_k = pres.s_value().pow(k as i64)?;
    let rhs = uk
        .multiply(&AlgebraElement::d(pres))?
        .scale(&s_k)
        .try_sub(&AlgebraElement::from_h_poly(pres, &pk)?.multiply(&u.pow(k - 1))?)?;
    Ok(lhs == rhs)
}

/// `z = ud − g(h)` for the conformality witness `g`, or `None` when `f` is
/// not conformal.
pub fn z_element(pres: &Arc<Presentation>) -> Result<Option<AlgebraElement>> {
    let Some(w) = conformal_witness(pres.f(), pres.r(), pres.s(), pres.gamma()) else {
        return Ok(None);
    };
    let ud = AlgebraElement::u(pres).multiply(&AlgebraElement::d(pres))?;
    Ok(Some(ud.try_sub(&AlgebraElement::from_h_poly(pres, w.g())?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::scalar::{CycloNumber, CyclotomicField, MonomialScalar};

    fn ms(n: i64, order: u32, k: i64) -> MonomialScalar {
        MonomialScalar::new(crate::scalar::Rational::from_integer(n.into()), order, k).unwrap()
    }

    #[test]
    fn relations_hold() {
        let k = CyclotomicField::new(3);
        let f = Poly::from_integers(&k, &[1, -1, 2]);
        for gamma in [CycloNumber::zero(&k), CycloNumber::zeta_power(&k, 1)] {
            let p = Presentation::new(&f, &ms(2, 3, 1), &ms(-1, 1, 0), &gamma);
            assert!(check_relations(&p));
        }
    }

    #[test]
    fn power_identity_examples() {
        let k = CyclotomicField::new(1);
        let zero = CycloNumber::zero(&k);
        let p = Presentation::new(&Poly::h(&k), &ms(2, 1, 0), &ms(3, 1, 0), &zero);
        assert_eq!(check_power_identity(&p, 1), Ok(true));
        assert_eq!(check_power_identity(&p, 2), Ok(true));
        let h2 = Poly::from_integers(&k, &[0, 0, 1]);
        let p = Presentation::new(&h2, &ms(1, 3, 1), &ms(1, 1, 0), &zero);
        assert_eq!(check_power_identity(&p, 3), Ok(true));
        assert!(p_k(p.f(), p.r(), p.s(), 3).p_k.is_zero());
        let p = Presentation::new(&h2, &ms(1, 3, 1), &ms(1, 1, 0), &CycloNumber::one(&k));
        assert!(matches!(check_power_identity(&p, 2), Err(Error::NotApplicable(_))));
    }
}
