//! Cyclotomic fields `ℚ(ζ_N)` represented in the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` modulo the cyclotomic polynomial `Φ_N`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::MonomialScalar;
use super::{lcm_u32, qpoly, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    assert!(n > 0, "totient of zero");
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials by a monic divisor.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd];
        quot[shift] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[shift + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_memo(n: u32, memo: &mut BTreeMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_memo(d, memo);
            poly = div_exact_monic(&poly, &phi_d);
        }
    }
    memo.insert(n, poly.clone());
    poly
}

/// The `n`-th cyclotomic polynomial `Φ_n`, coefficients from the constant
/// term upwards. Obtained by dividing `xⁿ − 1` by `Φ_d` for every proper
/// divisor `d` of `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial of order zero");
    cyclotomic_memo(n, &mut BTreeMap::new())
}

/// The field `ℚ(ζ_N)` for a fixed ambient order `N`.
///
/// Holds `Φ_N` and the reduced power-basis image of every `ζ^k`, `0 ≤ k < N`,
/// so that multiplication never has to redo polynomial division.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: Vec<i64>,
    zeta_powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        assert!(order > 0, "cyclotomic field of order zero");
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut zeta_powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            zeta_powers.push(cur.clone());
            // multiply by ζ and reduce the overflow coefficient with Φ_N
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            next[1..degree].copy_from_slice(&cur[..degree - 1]);
            if top != 0 {
                for (i, m) in modulus[..degree].iter().enumerate() {
                    next[i] -= top * m;
                }
            }
            cur = next;
        }
        Arc::new(CyclotomicField {
            order,
            degree,
            modulus,
            zeta_powers,
        })
    }

    /// The field whose order is the lcm of `orders` (order 1 if empty).
    pub fn common(orders: impl IntoIterator<Item = u32>) -> Arc<Self> {
        Self::new(orders.into_iter().fold(1, lcm_u32))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    fn zeta_power(&self, k: u64) -> &[i64] {
        &self.zeta_powers[(k % self.order as u64) as usize]
    }
}

/// An element of `ℚ(ζ_N)`.
///
/// Arithmetic through the operator traits requires both operands to share
/// the ambient order and panics otherwise; the `try_*` methods report
/// [`Error::AmbientOrderMismatch`] instead. Equality is by value, lifting
/// both sides to the lcm of their orders when they differ.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycloNumber {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = q;
        out
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    /// Build from power-basis coefficients; missing entries are zero.
    ///
    /// # Panics
    ///
    /// Panics if more than `φ(N)` coefficients are supplied.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        assert!(coeffs.len() <= field.degree, "too many power-basis coefficients");
        let mut out = Self::zero(field);
        for (i, c) in coeffs.into_iter().enumerate() {
            out.coeffs[i] = c;
        }
        out
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let k = k.rem_euclid(field.order as i64) as u64;
        let coeffs = field
            .zeta_power(k)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        CycloNumber {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn ambient_order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this number lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.field.order == other.field.order {
            Ok(())
        } else {
            Err(Error::AmbientOrderMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.field.degree;
        if n == 1 {
            return Ok(CycloNumber {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut wide = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<Rational> = wide.drain(..n).collect();
        for (t, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &z) in self.field.zeta_power((n + t) as u64).iter().enumerate() {
                if z != 0 {
                    coeffs[i] += &c * BigInt::from(z);
                }
            }
        }
        Ok(CycloNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Multiplicative inverse, by extended gcd of the representative with
    /// `Φ_N`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree == 1 {
            return Ok(CycloNumber {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let inv = qpoly::inverse_mod(&self.coeffs, &modulus)
            .expect("Φ_N is irreducible, so every nonzero residue is invertible");
        Ok(CycloNumber::from_coeffs(&self.field, inv))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = CycloNumber::one(&self.field);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Image under the embedding `ℚ(ζ_N) → ℚ(ζ_M)`, `ζ_N ↦ ζ_M^{M/N}`.
    pub fn lift(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let (n, m) = (self.field.order, target.order);
        if m % n != 0 {
            return Err(Error::OrderNotDivisible {
                order: n,
                ambient: m,
            });
        }
        if n == m {
            return Ok(CycloNumber {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            });
        }
        let step = (m / n) as u64;
        let mut out = CycloNumber::zero(target);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &z) in target.zeta_power(i as u64 * step).iter().enumerate() {
                if z != 0 {
                    out.coeffs[j] += c * BigInt::from(z);
                }
            }
        }
        Ok(out)
    }

    /// Lift both numbers to the field of order `lcm` of their orders.
    pub fn to_common(a: &Self, b: &Self) -> (Self, Self) {
        if a.field.order == b.field.order {
            return (a.clone(), b.clone());
        }
        let field = CyclotomicField::common([a.field.order, b.field.order]);
        (
            a.lift(&field).expect("lcm is a multiple"),
            b.lift(&field).expect("lcm is a multiple"),
        )
    }

    /// Recognise the value as `q·ζₙᵏ` with `q > 0`; `None` for zero or for
    /// values that are not a rational multiple of a root of unity.
    ///
    /// Every root of unity in `ℚ(ζ_N)` is `±ζ_N^j`, so it suffices to test
    /// whether `x·ζ_N^{−j}` is rational for some `0 ≤ j < N`.
    pub fn as_monomial(&self) -> Option<MonomialScalar> {
        if self.is_zero() {
            return None;
        }
        let n = self.field.order as i64;
        (0..n).find_map(|j| {
            let y = self * &CycloNumber::zeta_power(&self.field, -j);
            let q = y.as_rational()?;
            // q·ζ_N^j, folding a negative sign into ζ₂ = ζ_{2N}^N
            let (turn_num, turn_den) = if q.is_negative() {
                (2 * j as u64 + n as u64, 2 * n as u64)
            } else {
                (j as u64, n as u64)
            };
            Some(MonomialScalar::from_turn(q.abs(), turn_num, turn_den))
        })
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order == other.field.order {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = CycloNumber::to_common(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycloNumber {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.$try(rhs).expect("cyclotomic operands must share an ambient order")
            }
        }
        impl $trait<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

/// Formats one power-basis term `c·ζ_N^i` without its sign.
pub(crate) fn format_basis_term(mag: &Rational, order: u32, power: usize) -> String {
    use alloc::format;
    if power == 0 {
        return format!("{mag}");
    }
    let root = if power == 1 {
        format!("zeta({order})")
    } else {
        format!("zeta({order})^{power}")
    };
    if mag.is_one() {
        root
    } else {
        format!("{mag}*{root}")
    }
}

impl fmt::Display for CycloNumber {
    /// Writes the power-basis expansion in the CLI scalar grammar, e.g.
    /// `1 + zeta(4)` or `-1/2*zeta(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = format_basis_term(&c.abs(), self.field.order, i);
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber[N={}]({})", self.field.order, self)
    }
}
