//! Conformality of `f` in `L(f, r, s, γ)`, the split `f = f_c + f_nc` of a
//! non-conformal polynomial, and the polynomials `P_k` in
//! `d·uᵏ = sᵏ·uᵏ·d − P_k(h)·uᵏ⁻¹`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{group_structure, CycloNumber, CyclotomicField, MonomialScalar};

/// The smallest field containing `f`, `γ`, `r` and `s`, with everything
/// lifted into it.
pub(crate) struct Lifted {
    pub field: Arc<CyclotomicField>,
    pub f: Poly,
    pub r: CycloNumber,
    pub s: CycloNumber,
    pub gamma: CycloNumber,
}

pub(crate) fn lift_all(
    f: &Poly,
    r: &MonomialScalar,
    s: &MonomialScalar,
    gamma: &CycloNumber,
) -> Lifted {
    let field = CyclotomicField::common([
        f.ambient_order(),
        gamma.ambient_order(),
        r.root_order(),
        s.root_order(),
    ]);
    Lifted {
        f: f.lift(&field).expect("common order"),
        r: r.to_cyclo(&field).expect("common order"),
        s: s.to_cyclo(&field).expect("common order"),
        gamma: gamma.lift(&field).expect("common order"),
        field,
    }
}

/// `g* = s·g(h) − g(r·h − γ)`. All arguments must share one field.
pub fn star(g: &Poly, r: &CycloNumber, s: &CycloNumber, gamma: &CycloNumber) -> Poly {
    &g.scale(s) - &g.compose_affine(r, &-gamma)
}

/// A polynomial `g` with `f(h) = s·g(h) − g(r·h − γ)`, checked on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalWitness {
    g: Poly,
}

impl ConformalWitness {
    pub fn g(&self) -> &Poly {
        &self.g
    }
}

/// Solve `A·x = b` by reduction to row echelon form, with free variables set
/// to zero. `None` if the system is inconsistent.
pub(crate) fn solve_linear(mut a: Vec<Vec<CycloNumber>>, mut b: Vec<CycloNumber>) -> Option<Vec<CycloNumber>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let field = b[0].field().clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].inv().expect("nonzero pivot");
        for x in &mut a[row][col..] {
            *x = &*x * &inv;
        }
        b[row] = &b[row] * &inv;
        for i in 0..rows {
            if i != row && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                let pivot_row = a[row].clone();
                for (x, p) in a[i][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = &*x - &(p * &factor);
                }
                let t = &b[row] * &factor;
                b[i] = &b[i] - &t;
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = alloc::vec![CycloNumber::zero(&field); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = b[i].clone();
    }
    Some(x)
}

/// Solves `s·g(h) − g(r·h − γ) = f` over polynomials `g` of degree at most
/// `deg f + 1`.
///
/// The map `g ↦ g*` is triangular in the monomial basis with diagonal
/// `s − rⁱ`; the one extra degree covers `r = s = 1, γ ≠ 0`, where `g*` is a
/// difference operator and lowers degree by one. Free coordinates are set to
/// zero, so the answer is deterministic.
pub fn conformal_witness(
    f: &Poly,
    r: &MonomialScalar,
    s: &MonomialScalar,
    gamma: &CycloNumber,
) -> Option<ConformalWitness> {
    let l = lift_all(f, r, s, gamma);
    let Some(deg) = l.f.degree() else {
        return Some(ConformalWitness {
            g: Poly::zero(&l.field),
        });
    };
    let n = deg + 2;
    // column i holds the coefficients of (hⁱ)*
    let columns: Vec<Poly> = (0..n)
        .map(|i| star(&Poly::monomial(CycloNumber::one(&l.field), i), &l.r, &l.s, &l.gamma))
        .collect();
    let matrix = (0..n)
        .map(|m| columns.iter().map(|c| c.coeff(m)).collect())
        .collect();
    let rhs = (0..n).map(|m| l.f.coeff(m)).collect();
    let g = Poly::from_coeffs(&l.field, solve_linear(matrix, rhs)?);
    assert_eq!(
        star(&g, &l.r, &l.s, &l.gamma),
        l.f,
        "conformality witness failed verification"
    );
    Some(ConformalWitness { g })
}

pub fn is_conformal(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, gamma: &CycloNumber) -> bool {
    conformal_witness(f, r, s, gamma).is_some()
}

/// Exponents `i` of `f` with `s = rⁱ`.
fn resonant_support(f: &Poly, r: &MonomialScalar, s: &MonomialScalar) -> Vec<usize> {
    f.support()
        .into_iter()
        .filter(|&i| r.pow(i as i64) == *s)
        .collect()
}

/// Conformality decided by the classical criteria instead of a linear
/// solve:
///
/// * `γ = 0`: conformal iff `s ≠ rⁱ` for every `i ∈ supp f`;
/// * `r ≠ 1`: conformal iff `f̃(h) = f((h + γ)/(r − 1))` is conformal with
///   `γ = 0`;
/// * `r = 1`: conformal unless `s = 1`, `γ = 0` and `f ≠ 0`.
pub fn is_conformal_by_criteria(
    f: &Poly,
    r: &MonomialScalar,
    s: &MonomialScalar,
    gamma: &CycloNumber,
) -> bool {
    if gamma.is_zero() {
        return resonant_support(f, r, s).is_empty();
    }
    if r.is_one() {
        return true;
    }
    resonant_support(&normalize_gamma(f, r, gamma), r, s).is_empty()
}

/// `f̃(h) = f((h + γ)/(r − 1))`, which turns `L(f, r, s, γ)` into
/// `L(f̃, r, s, 0)` when `r ≠ 1`.
///
/// # Panics
///
/// Panics if `r = 1`.
pub fn normalize_gamma(f: &Poly, r: &MonomialScalar, gamma: &CycloNumber) -> Poly {
    assert!(!r.is_one(), "gamma normalisation needs r != 1");
    let field = CyclotomicField::common([f.ambient_order(), gamma.ambient_order(), r.root_order()]);
    let rc = r.to_cyclo(&field).expect("common order");
    let gamma = gamma.lift(&field).expect("common order");
    let a = (&rc - &CycloNumber::one(&field)).inv().expect("r != 1");
    let b = &gamma * &a;
    f.lift(&field).expect("common order").compose_affine(&a, &b)
}

/// `f = f_c + f_nc` for `f` not conformal in `L(f, r, s, 0)`, where `f_nc`
/// collects the terms `a_i hⁱ` with `s = rⁱ` and `f_nc = hʲ·F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcDecomposition {
    pub f_c: Poly,
    pub f_nc: Poly,
    pub j: usize,
    pub big_f: Poly,
}

pub fn nc_decomposition(f: &Poly, r: &MonomialScalar, s: &MonomialScalar) -> Result<NcDecomposition> {
    let resonant = resonant_support(f, r, s);
    let Some(&j) = resonant.first() else {
        return Err(Error::NotApplicable(format!(
            "f = {f} is conformal for r = {r}, s = {s}"
        )));
    };
    let field = f.field();
    let mut nc = alloc::vec![CycloNumber::zero(field); f.coeffs().len()];
    for &i in &resonant {
        nc[i] = f.coeff(i);
    }
    let f_nc = Poly::from_coeffs(field, nc);
    let f_c = f - &f_nc;
    let big_f = f_nc.shift_down(j);
    Ok(NcDecomposition { f_c, f_nc, j, big_f })
}

/// `P_k(h)` for `L(f, r, s, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PkData {
    pub k: u32,
    pub p_k: Poly,
}

/// `P_k(h) = Σ_{i<k} sⁱ·f(r⁻ⁱh)` by direct summation.
pub fn p_k(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, k: u32) -> PkData {
    let zero = CycloNumber::zero(f.field());
    let l = lift_all(f, r, s, &zero);
    let r_inv = l.r.inv().expect("r nonzero");
    let mut total = Poly::zero(&l.field);
    let mut s_pow = CycloNumber::one(&l.field);
    let mut r_pow = CycloNumber::one(&l.field);
    for _ in 0..k {
        total = &total + &l.f.dilate(&r_pow).scale(&s_pow);
        s_pow = &s_pow * &l.s;
        r_pow = &r_pow * &r_inv;
    }
    PkData { k, p_k: total }
}

/// `P_k = sᵏ·g(r¹⁻ᵏh) − g(rh)`, valid when `f = s·g(h) − g(rh)`.
pub fn p_k_closed_form(g: &Poly, r: &MonomialScalar, s: &MonomialScalar, k: u32) -> Poly {
    let zero = CycloNumber::zero(g.field());
    let l = lift_all(g, r, s, &zero);
    let k = k as i64;
    let rk = r.pow(1 - k).to_cyclo(&l.field).expect("common order");
    let sk = s.pow(k).to_cyclo(&l.field).expect("common order");
    &l.f.dilate(&rk).scale(&sk) - &l.f.dilate(&l.r)
}

/// The coefficient of `hᵐ` in `P_k`: `a_m·k` if `s = rᵐ`, otherwise
/// `a_m·((s·r⁻ᵐ)ᵏ − 1)/(s·r⁻ᵐ − 1)`.
pub fn p_k_coefficient(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, k: u32, m: usize) -> CycloNumber {
    let zero = CycloNumber::zero(f.field());
    let l = lift_all(f, r, s, &zero);
    let a = l.f.coeff(m);
    let t = s.mul(&r.pow(-(m as i64)));
    if t.is_one() {
        return a.scale(&crate::scalar::Rational::from_integer(k.into()));
    }
    let t = t.to_cyclo(&l.field).expect("common order");
    let one = CycloNumber::one(&l.field);
    let num = &t.pow(k as i64).expect("nonzero") - &one;
    let den = &t - &one;
    &a * &num.try_div(&den).expect("t != 1")
}

/// The least `k > 0` with `P_k = 0`, if any.
///
/// It exists iff every `s·r⁻ᵐ`, `m ∈ supp f`, is a root of unity other than
/// 1, and is then the lcm of their orders. The answer is re-checked by
/// summation.
pub fn minimal_vanishing_k(f: &Poly, r: &MonomialScalar, s: &MonomialScalar) -> Result<Option<u32>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut k = 1u32;
    for m in f.support() {
        match s.mul(&r.pow(-(m as i64))).is_root_of_unity() {
            Some(order) if order > 1 => k = num_integer::Integer::lcm(&k, &order),
            _ => return Ok(None),
        }
    }
    assert!(p_k(f, r, s, k).p_k.is_zero(), "P_k must vanish at the lcm of orders");
    assert!(!p_k(f, r, s, k - 1).p_k.is_zero() || k == 1);
    Ok(Some(k))
}

/// Existence of principal eigenvectors, in the two regimes where the notion
/// is defined: `γ = 0` (iff `τ > 0`) and `r = 1, γ ≠ 0` (iff `s` is a root
/// of unity).
pub fn has_principal_eigenvector(r: &MonomialScalar, s: &MonomialScalar, gamma: &CycloNumber) -> Result<bool> {
    if gamma.is_zero() {
        Ok(group_structure(r, s).tau > 0)
    } else if r.is_one() {
        Ok(s.is_root_of_unity().is_some())
    } else {
        Err(Error::NotApplicable(format!(
            "principal eigenvectors need gamma = 0 or r = 1 (got r = {r}, gamma = {gamma})"
        )))
    }
}
