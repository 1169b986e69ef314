//! Exact arithmetic for generalized down-up algebras `L(f, r, s, γ)` and the
//! decision procedure for when such an algebra is a Noetherian unique
//! factorisation ring (UFR) or domain (UFD).
//!
//! The algebra is generated by `d`, `u`, `h` subject to
//!
//! ```text
//! dh - r·hd + γ·d = 0,   hu - r·uh + γ·u = 0,   du - s·ud + f(h) = 0.
//! ```
//!
//! Scalars `r`, `s` are restricted to [`MonomialScalar`]s (a positive
//! rational times a root of unity); `γ` and the coefficients of `f` live in a
//! cyclotomic field. Every answer is computed exactly, and most come with a
//! witness that can be re-checked independently (a conformality witness, the
//! relation lattice of `⟨r, s⟩`, normal-form identities in the PBW basis,
//! finite-dimensional representations).
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod conformal;
mod error;
pub mod pbw;
pub mod poly;
pub mod scalar;

pub use classify::{
    classify, classify_by_regime, classify_downup, classify_downup_roots, classify_parameters,
    classify_parameters_by_regime, classify_smith, downup_roots, prime_inventory, Classification,
    Coverage, GeneratorTag, Inventory, Parameters, PrimeDescriptor, TraceStep, Verdict, Witnesses,
};
pub use conformal::{ConformalWitness, NcDecomposition, PkData};
pub use error::{Error, Result};
pub use pbw::{AlgebraElement, MatrixRep, Presentation};
pub use poly::Poly;
pub use scalar::{
    group_structure, relation_lattice, CycloNumber, CyclotomicField, GroupStructure,
    MonomialScalar, Rational,
};
