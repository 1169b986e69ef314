use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::Presentation;
use crate::conformal::p_k;
use crate::error::{Error, Result};
use crate::scalar::{CycloNumber, CyclotomicField};

type Matrix = Vec<Vec<CycloNumber>>;

fn zeros(field: &Arc<CyclotomicField>, n: usize) -> Matrix {
    alloc::vec![alloc::vec![CycloNumber::zero(field); n]; n]
}

fn identity(field: &Arc<CyclotomicField>, n: usize) -> Matrix {
    let mut m = zeros(field, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = CycloNumber::one(field);
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let field = a[0][0].field().clone();
    let mut out = zeros(&field, n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn mat_lin(a: &Matrix, x: &CycloNumber, b: &Matrix, y: &CycloNumber) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| &(p * x) + &(q * y)).collect())
        .collect()
}

fn is_zero(m: &Matrix) -> bool {
    m.iter().flatten().all(CycloNumber::is_zero)
}

/// The finite-dimensional simple module `L_λ = V_λ / M_λ` of `L(f, r, s, 0)`
/// on the basis `v₀, …, v_{k−1}`, as matrices acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub dim: usize,
    pub lambda: CycloNumber,
    pub d: Matrix,
    pub u: Matrix,
    pub h: Matrix,
}

impl MatrixRep {
    /// The three defining relations and `Dᵏ = Uᵏ = 0`.
    pub fn verify(&self, pres: &Presentation) -> Result<(), &'static str> {
        let field = pres.field();
        let one = CycloNumber::one(field);
        let r = pres.r_value();
        let s = pres.s_value();
        let gamma = pres.gamma();
        let (d, u, h) = (&self.d, &self.u, &self.h);
        let rel1 = mat_lin(&mat_lin(&mat_mul(d, h), &one, &mat_mul(h, d), &-r), &one, d, gamma);
        if !is_zero(&rel1) {
            return Err("dh - r*hd + gamma*d != 0");
        }
        let rel2 = mat_lin(&mat_lin(&mat_mul(h, u), &one, &mat_mul(u, h), &-r), &one, u, gamma);
        if !is_zero(&rel2) {
            return Err("hu - r*uh + gamma*u != 0");
        }
        // f(H) by Horner
        let n = self.dim;
        let f_h = pres.f().coeffs().iter().rev().fold(zeros(field, n), |acc, c| {
            mat_lin(&mat_mul(&acc, h), &one, &identity(field, n), c)
        });
        let rel3 = mat_lin(&mat_lin(&mat_mul(d, u), &one, &mat_mul(u, d), &-s), &one, &f_h, &one);
        if !is_zero(&rel3) {
            return Err("du - s*ud + f(h) != 0");
        }
        let pow = |m: &Matrix| (0..n).fold(identity(field, n), |acc, _| mat_mul(&acc, m));
        if !is_zero(&pow(d)) {
            return Err("D^k != 0");
        }
        if !is_zero(&pow(u)) {
            return Err("U^k != 0");
        }
        Ok(())
    }
}

/// Builds `L_λ` for `L(f, r, s, 0)`:
/// `H = diag(λ, rλ, …, r^{k−1}λ)`, `U·v_m = v_{m+1}` (and `U` kills
/// `v_{k−1}`), `D·v_m = −P_m(r^{m−1}λ)·v_{m−1}`.
///
/// Requires `P_k(r^{k−1}λ) = 0` with `k` minimal; the matrices are checked
/// against every relation before they are returned.
pub fn v_lambda_rep(pres: &Arc<Presentation>, lambda: &CycloNumber, k: u32) -> Result<MatrixRep> {
    if !pres.gamma().is_zero() {
        return Err(Error::NotApplicable("V_lambda is defined for gamma = 0".into()));
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be positive".into()));
    }
    let field = pres.field();
    let lambda = lambda.lift(field)?;
    let r = pres.r_value();
    let r_pow = |e: i64| r.pow(e).expect("r nonzero");
    // P_m(r^{m−1}λ) for m = 1..=k
    let p_vals: Vec<CycloNumber> = (1..=k)
        .map(|m| {
            p_k(pres.f(), pres.r(), pres.s(), m)
                .p_k
                .lift(field)
                .expect("ambient field")
                .eval(&(&r_pow(m as i64 - 1) * &lambda))
        })
        .collect();
    if !p_vals[k as usize - 1].is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "P_{k}(r^{}*lambda) != 0",
            k - 1
        )));
    }
    if let Some(m) = p_vals[..k as usize - 1].iter().position(CycloNumber::is_zero) {
        return Err(Error::PreconditionViolated(format!(
            "k = {k} is not minimal: P_{}(r^{}*lambda) = 0",
            m + 1,
            m
        )));
    }
    let n = k as usize;
    let mut h = zeros(field, n);
    let mut u = zeros(field, n);
    let mut d = zeros(field, n);
    for m in 0..n {
        h[m][m] = &r_pow(m as i64) * &lambda;
        if m + 1 < n {
            u[m + 1][m] = CycloNumber::one(field);
        }
        if m > 0 {
            d[m - 1][m] = -&p_vals[m - 1];
        }
    }
    let rep = MatrixRep {
        dim: n,
        lambda,
        d,
        u,
        h,
    };
    rep.verify(pres)
        .map_err(|e| Error::PreconditionViolated(format!("representation check failed: {e}")))?;
    Ok(rep)
}
