use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{gamma_free_f, w_value, witnesses, Witnesses};
use crate::pbw::{z_element, AlgebraElement, Presentation};

/// The shape of a height-one prime generator.
///
/// Whenever `r ≠ 1`, `h` stands for `h − γ/(r − 1)`, the normal element
/// that plays the role of `h` once `γ` has been removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorTag {
    H,
    HPowLMinusLambda,
    D,
    U,
    DuMinusUd,
    /// `zˡ − λ` with `z = ud − g(h)`.
    ZPowLMinusLambda,
    HMinusLambda,
    UPowK,
    DPowK,
    /// The annihilator of a finite-dimensional simple module; never
    /// principal.
    QLambda,
}

impl GeneratorTag {
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorTag::H => "H",
            GeneratorTag::HPowLMinusLambda => "H_POW_L_MINUS_LAMBDA",
            GeneratorTag::D => "D",
            GeneratorTag::U => "U",
            GeneratorTag::DuMinusUd => "DU_MINUS_UD",
            GeneratorTag::ZPowLMinusLambda => "Z_POW_L_MINUS_LAMBDA",
            GeneratorTag::HMinusLambda => "H_MINUS_LAMBDA",
            GeneratorTag::UPowK => "U_POW_K",
            GeneratorTag::DPowK => "D_POW_K",
            GeneratorTag::QLambda => "Q_LAMBDA",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coverage {
    CompleteList,
    PartialList,
}

impl Coverage {
    pub fn as_str(self) -> &'static str {
        match self {
            Coverage::CompleteList => "COMPLETE_LIST",
            Coverage::PartialList => "PARTIAL_LIST",
        }
    }
}

pub const LAMBDA_NONZERO: &str = "lambda in K*";
pub const LAMBDA_ANY: &str = "lambda in K";
const LAMBDA_FINITE_DIM: &str = "lambda in K* with P_k(r^(k-1)*lambda) = 0 for some k > 0";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDescriptor {
    pub generator: GeneratorTag,
    /// `l` or `k` for the tags that carry one.
    pub exponent: Option<u32>,
    pub family_parameter: Option<&'static str>,
    pub completely_prime: Option<bool>,
    pub principal: bool,
    pub coverage: Coverage,
}

impl PrimeDescriptor {
    /// The generator as an element of `pres`, taking `λ = 1` for families.
    /// `None` for `Q_LAMBDA`, which has no single generator.
    pub fn sample_element(&self, pres: &Arc<Presentation>) -> Option<AlgebraElement> {
        let one = AlgebraElement::one(pres);
        let h = AlgebraElement::h(pres);
        let h_shift = match w_value(pres) {
            Some(w) => h.try_sub(&AlgebraElement::one(pres).scale(&w)).expect("same presentation"),
            None => h.clone(),
        };
        let minus_one = |x: AlgebraElement| x.try_sub(&one).expect("same presentation");
        let e = self.exponent.unwrap_or(1);
        let mul = |a: &AlgebraElement, b: &AlgebraElement| a.multiply(b).expect("same presentation");
        Some(match self.generator {
            GeneratorTag::H => h_shift,
            GeneratorTag::HPowLMinusLambda => minus_one(h_shift.pow(e)),
            GeneratorTag::HMinusLambda => minus_one(h),
            GeneratorTag::D => AlgebraElement::d(pres),
            GeneratorTag::U => AlgebraElement::u(pres),
            GeneratorTag::DuMinusUd => {
                let (d, u) = (AlgebraElement::d(pres), AlgebraElement::u(pres));
                mul(&d, &u).try_sub(&mul(&u, &d)).expect("same presentation")
            }
            GeneratorTag::ZPowLMinusLambda => minus_one(z_element(pres).ok()??.pow(e)),
            GeneratorTag::UPowK => AlgebraElement::u(pres).pow(e),
            GeneratorTag::DPowK => AlgebraElement::d(pres).pow(e),
            GeneratorTag::QLambda => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inventory {
    pub coverage: Coverage,
    pub primes: Vec<PrimeDescriptor>,
}

/// Height-one primes the theory exhibits for `pres`.
///
/// The list is complete in three regimes: `f = 0, γ ≠ 0, r = 1`; `f ≠ 0`
/// conformal with `r = 1, γ = 0` and `s` not a root of unity; and `f` a
/// nonzero constant with `s = 1, γ = 0`. Elsewhere it holds what is known
/// to be prime (`h`, `hˡ − λ`, `uᵏ`, `dᵏ`, the generators of quantum affine
/// space) plus a non-principal `Q_LAMBDA` marker where such primes obstruct
/// factoriality.
pub fn prime_inventory(pres: &Arc<Presentation>) -> Inventory {
    build(pres, &witnesses(pres))
}

fn desc(
    generator: GeneratorTag,
    exponent: Option<u32>,
    family_parameter: Option<&'static str>,
    completely_prime: Option<bool>,
) -> PrimeDescriptor {
    PrimeDescriptor {
        generator,
        exponent,
        family_parameter,
        completely_prime,
        principal: generator != GeneratorTag::QLambda,
        coverage: Coverage::PartialList,
    }
}

/// `h` and, when `r` has order `l`, the central `hˡ − λ`.
fn h_family(wit: &Witnesses) -> Vec<PrimeDescriptor> {
    let mut out = alloc::vec![desc(GeneratorTag::H, None, None, Some(true))];
    if let Some(l) = wit.r_order {
        out.push(desc(GeneratorTag::HPowLMinusLambda, Some(l), Some(LAMBDA_NONZERO), Some(l == 1)));
    }
    out
}

pub(crate) fn build(pres: &Presentation, wit: &Witnesses) -> Inventory {
    let f = gamma_free_f(pres);
    let (r, s) = (pres.r(), pres.s());
    // γ survives normalisation only when r = 1
    let gamma_zero = pres.gamma().is_zero() || !r.is_one();
    let d_and_u = || {
        [
            desc(GeneratorTag::D, None, None, Some(true)),
            desc(GeneratorTag::U, None, None, Some(true)),
        ]
    };
    let mut primes = Vec::new();
    let complete = if f.is_zero() && !gamma_zero {
        primes.extend(d_and_u());
        if let Some(l) = wit.s_order {
            primes.push(desc(GeneratorTag::ZPowLMinusLambda, Some(l), Some(LAMBDA_NONZERO), Some(l == 1)));
        }
        true
    } else if !f.is_zero() && wit.conformal && r.is_one() && gamma_zero && wit.s_order.is_none() {
        primes.push(desc(GeneratorTag::HMinusLambda, None, Some(LAMBDA_ANY), Some(true)));
        primes.push(desc(GeneratorTag::DuMinusUd, None, None, Some(true)));
        true
    } else if f.degree() == Some(0) && s.is_one() && pres.gamma().is_zero() {
        primes.extend(h_family(wit));
        true
    } else {
        // u, d and their powers only q-commute with h itself when γ = 0;
        // after the shift they are normal but uncertified, so left out
        let given_gamma_zero = pres.gamma().is_zero();
        if gamma_zero {
            primes.extend(h_family(wit));
            if f.is_zero() && given_gamma_zero {
                primes.extend(d_and_u());
            }
        }
        if !f.is_zero() && gamma_zero {
            if let (true, Some(k), true) = (wit.conformal, wit.minimal_k, given_gamma_zero) {
                primes.push(desc(GeneratorTag::UPowK, Some(k), None, None));
                primes.push(desc(GeneratorTag::DPowK, Some(k), None, None));
            }
            if wit.r_order.is_none() && !f.is_monomial() {
                primes.push(desc(GeneratorTag::QLambda, None, Some(LAMBDA_FINITE_DIM), None));
            }
        }
        false
    };
    let coverage = if complete {
        Coverage::CompleteList
    } else {
        Coverage::PartialList
    };
    for p in &mut primes {
        p.coverage = coverage;
    }
    Inventory { coverage, primes }
}
