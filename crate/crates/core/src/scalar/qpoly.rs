//! Dense univariate polynomials over ℚ, just enough for reduction and
//! inversion modulo a cyclotomic polynomial.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shifted(acc: &mut [Rational], p: &[Rational], scale: &Rational, shift: usize) {
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc[i + shift] -= c * scale;
        }
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero (trimmed).
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = &rem[rem.len() - 1] * &lead_inv;
        sub_scaled_shifted(&mut rem, b, &c, shift);
        quot[shift] = c;
        // the leading coefficient is now exactly zero
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm; `None`
/// when `gcd(a, m) ≠ 1`.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<Rational> = Vec::new();
    let mut t1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: Vec<Rational> = t0.into_iter().map(|x| x * &c).collect();
    let (_, rem) = divrem(&inv, m);
    inv = rem;
    Some(inv)
}
