use alloc::format;
use alloc::sync::Arc;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{format_basis_term, CycloNumber, CyclotomicField};
use super::{gcd_u64, Rational};
use crate::error::{Error, Result};

/// A nonzero scalar `q·ζₙᵏ` with `q > 0` rational and `ζₙ` a primitive
/// `n`-th root of unity.
///
/// The root part is kept at its minimal order: `gcd(k, n) = 1`, and the
/// trivial root is `n = 1, k = 0`. Negative rationals carry their sign as
/// `ζ₂`, so `−3` is `q = 3, n = 2, k = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialScalar {
    q: Rational,
    root_order: u32,
    root_exponent: u32,
}

impl MonomialScalar {
    /// `q·ζₙᵏ` for any nonzero rational `q`, any `n ≥ 1` and any integer `k`.
    pub fn new(q: Rational, n: u32, k: i64) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroScalar);
        }
        assert!(n > 0, "root of unity of order zero");
        let n = n as u64;
        let k = k.rem_euclid(n as i64) as u64;
        Ok(if q.is_negative() {
            Self::from_turn(-q, 2 * k + n, 2 * n)
        } else {
            Self::from_turn(q, k, n)
        })
    }

    pub fn from_rational(q: Rational) -> Result<Self> {
        Self::new(q, 1, 0)
    }

    pub fn from_integer(n: i64) -> Result<Self> {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn one() -> Self {
        Self::from_turn(Rational::one(), 0, 1)
    }

    /// `q·exp(2πi·num/den)` with `q > 0`, reduced to canonical form.
    pub(crate) fn from_turn(q: Rational, num: u64, den: u64) -> Self {
        debug_assert!(q.is_positive());
        let num = num % den;
        let g = gcd_u64(num, den);
        let (k, n) = if num == 0 { (0, 1) } else { (num / g, den / g) };
        MonomialScalar {
            q,
            root_order: u32::try_from(n).expect("root order fits in u32"),
            root_exponent: k as u32,
        }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn root_exponent(&self) -> u32 {
        self.root_exponent
    }

    pub fn is_one(&self) -> bool {
        self.q.is_one() && self.root_order == 1
    }

    /// The order as a root of unity, or `None` if `q ≠ 1`.
    pub fn is_root_of_unity(&self) -> Option<u32> {
        self.q.is_one().then_some(self.root_order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n1, n2) = (self.root_order as u64, other.root_order as u64);
        let den = n1 / gcd_u64(n1, n2) * n2;
        let num = self.root_exponent as u64 * (den / n1) + other.root_exponent as u64 * (den / n2);
        Self::from_turn(&self.q * &other.q, num, den)
    }

    pub fn inv(&self) -> Self {
        let n = self.root_order as u64;
        Self::from_turn(self.q.recip(), n - self.root_exponent as u64, n)
    }

    pub fn pow(&self, e: i64) -> Self {
        let n = self.root_order as i64;
        let k = (self.root_exponent as i64 * e.rem_euclid(n)).rem_euclid(n);
        let e32 = i32::try_from(e).expect("exponent fits in i32");
        Self::from_turn(self.q.pow(e32), k as u64, n as u64)
    }

    /// Image in `ℚ(ζ_N)` for a field whose order is a multiple of `n`.
    pub fn to_cyclo(&self, field: &Arc<CyclotomicField>) -> Result<CycloNumber> {
        let n = self.root_order;
        if field.order() % n != 0 {
            return Err(Error::OrderNotDivisible {
                order: n,
                ambient: field.order(),
            });
        }
        let step = (field.order() / n) as i64;
        Ok(CycloNumber::zeta_power(field, self.root_exponent as i64 * step).scale(&self.q))
    }
}

/// Image of `m` in `ℚ(ζ_N)`.
pub fn embed(m: &MonomialScalar, n: u32) -> Result<CycloNumber> {
    m.to_cyclo(&CyclotomicField::new(n))
}

/// The order of `m` as a root of unity, or `None` when `|m| ≠ 1`.
pub fn is_root_of_unity(m: &MonomialScalar) -> Option<u32> {
    m.is_root_of_unity()
}

impl fmt::Display for MonomialScalar {
    /// `2`, `-1/2`, `zeta(3)`, `1/2*zeta(6)^5`, all parseable by the CLI.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root_order {
            1 => write!(f, "{}", self.q),
            2 => write!(f, "-{}", self.q),
            n => write!(
                f,
                "{}",
                format_basis_term(&self.q, n, self.root_exponent as usize)
            ),
        }
    }
}

impl fmt::Debug for MonomialScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format!("MonomialScalar({self})"))
    }
}
