//! Exact scalars: rationals, cyclotomic numbers, monomial scalars `q·ζₙᵏ`, and
//! the multiplicative relation lattice of a pair of monomial scalars.

mod cyclotomic;
mod lattice;
mod monomial;
mod qpoly;

pub use cyclotomic::{cyclotomic_polynomial, totient, CycloNumber, CyclotomicField};
pub use lattice::{
    group_structure, hermite_normal_form, lattice_contains, relation_lattice, smith_divisors,
    GroupStructure,
    LatticeVector,
};
pub use monomial::{embed, is_root_of_unity, MonomialScalar};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::Integer::lcm(&a, &b)
}
