//! The relation lattice `Λ = {(α, β) ∈ ℤ² : r^α s^β = 1}` of two monomial
//! scalars, its Hermite and Smith normal forms, and the invariants `τ`, `ε`
//! read off from it.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::monomial::MonomialScalar;
use super::Rational;

/// A row `(α, β)` of a lattice basis.
pub type LatticeVector = (i64, i64);

/// Invariants of the group `⟨r, s⟩ ≅ ℤ² / Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    /// Basis of `Λ` in row Hermite normal form.
    pub lattice_basis: Vec<LatticeVector>,
    /// Free rank of `⟨r, s⟩`, i.e. `2 − rank Λ`.
    pub group_rank: u8,
    pub torsionfree: bool,
    /// Least `τ > 0` with `s^τ ∈ ⟨r⟩`, or 0 if there is none.
    pub tau: u64,
    /// The exponent with `r^ε = s^τ`; 0 when `τ = 0`. Only defined modulo
    /// the order of `r` when `r` is a root of unity, in which case the
    /// smallest nonnegative representative is reported.
    pub epsilon: i64,
    pub r_order: Option<u32>,
    pub s_order: Option<u32>,
}

/// Row Hermite normal form of the lattice spanned by `rows`.
///
/// The result has at most two rows; the leading entry of each row is
/// positive, and in the rank-2 case it is `[(p, x), (0, q)]` with
/// `0 ≤ x < q`.
pub fn hermite_normal_form(rows: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut pivot: Option<(i64, i64)> = None;
    let mut q: i64 = 0;
    for &(a, b) in rows {
        if a == 0 {
            q = q.gcd(&b);
            continue;
        }
        match pivot {
            None => pivot = Some((a, b)),
            Some((pa, pb)) => {
                let e = pa.extended_gcd(&a);
                let g = e.gcd;
                let new = (g, e.x * pb + e.y * b);
                // the combination with vanishing first coordinate
                let rest = (a / g) * pb - (pa / g) * b;
                q = q.gcd(&rest);
                pivot = Some(new);
            }
        }
    }
    let q = q.abs();
    match pivot {
        None if q == 0 => vec![],
        None => vec![(0, q)],
        Some((a, b)) => {
            let (a, b) = if a < 0 { (-a, -b) } else { (a, b) };
            if q == 0 {
                vec![(a, b)]
            } else {
                vec![(a, b.rem_euclid(q)), (0, q)]
            }
        }
    }
}

/// Elementary divisors of the basis matrix (one per row).
pub fn smith_divisors(basis: &[LatticeVector]) -> Vec<u64> {
    match basis {
        [] => vec![],
        [(a, b)] => vec![a.gcd(b) as u64],
        [(a, b), (c, d)] => {
            let d1 = a.gcd(b).gcd(c).gcd(d);
            let det = (a * d - b * c).abs();
            vec![d1 as u64, (det / d1) as u64]
        }
        _ => smith_divisors(&hermite_normal_form(basis)),
    }
}

/// Refine `nums` into a set of pairwise coprime integers `> 1` such that
/// every input is a product of powers of them.
fn coprime_base(nums: &[BigUint]) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = nums.iter().filter(|n| !n.is_one()).cloned().collect();
    'outer: loop {
        base.sort();
        base.dedup();
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if !g.is_one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.swap_remove(j);
                    base.swap_remove(i);
                    base.extend([g, a, b].into_iter().filter(|x| !x.is_one()));
                    continue 'outer;
                }
            }
        }
        return base;
    }
}

fn exponent_vector(x: &BigUint, base: &[BigUint]) -> Vec<i64> {
    let mut x = x.clone();
    let v = base
        .iter()
        .map(|p| {
            let mut e = 0;
            while (&x % p).is_zero() {
                x /= p;
                e += 1;
            }
            e
        })
        .collect();
    debug_assert!(x.is_one(), "coprime base does not cover input");
    v
}

/// Generators of `{(α, β) : q_r^α q_s^β = 1}` for positive rationals.
fn rational_kernel(qr: &Rational, qs: &Rational) -> Vec<LatticeVector> {
    let parts = |q: &Rational| (q.numer().magnitude().clone(), q.denom().magnitude().clone());
    let (nr, dr) = parts(qr);
    let (ns, ds) = parts(qs);
    let base = coprime_base(&[nr.clone(), dr.clone(), ns.clone(), ds.clone()]);
    let diff = |n: &BigUint, d: &BigUint| -> Vec<i64> {
        exponent_vector(n, &base)
            .into_iter()
            .zip(exponent_vector(d, &base))
            .map(|(a, b)| a - b)
            .collect()
    };
    let vr = diff(&nr, &dr);
    let vs = diff(&ns, &ds);
    let zero_r = vr.iter().all(|&x| x == 0);
    let zero_s = vs.iter().all(|&x| x == 0);
    match (zero_r, zero_s) {
        (true, true) => vec![(1, 0), (0, 1)],
        (true, false) => vec![(1, 0)],
        (false, true) => vec![(0, 1)],
        (false, false) => {
            let i = vr.iter().position(|&x| x != 0).expect("nonzero vector");
            let proportional = vr
                .iter()
                .zip(&vs)
                .all(|(&a, &b)| vs[i] * a == vr[i] * b);
            if proportional {
                let g = vs[i].gcd(&vr[i]);
                vec![(vs[i] / g, -vr[i] / g)]
            } else {
                vec![]
            }
        }
    }
}

/// Basis of `Λ = {(α, β) : r^α s^β = 1}` in row Hermite normal form.
///
/// The rational parts contribute a kernel computed over a coprime base of
/// their numerators and denominators (no integer factoring). The roots of
/// unity contribute the congruence `α·a + β·b ≡ 0 (mod M)` with
/// `M = lcm(n_r, n_s)`, `a = k_r·M/n_r`, `b = k_s·M/n_s`.
pub fn relation_lattice(r: &MonomialScalar, s: &MonomialScalar) -> Vec<LatticeVector> {
    let m = (r.root_order() as i64).lcm(&(s.root_order() as i64));
    let a = r.root_exponent() as i64 * (m / r.root_order() as i64);
    let b = s.root_exponent() as i64 * (m / s.root_order() as i64);
    let kernel = rational_kernel(r.q(), s.q());
    let rows = match kernel.as_slice() {
        [] => vec![],
        [(v1, v2)] => {
            let c = (v1 * a + v2 * b).rem_euclid(m);
            let t = m / m.gcd(&c);
            vec![(t * v1, t * v2)]
        }
        _ => {
            // full congruence lattice
            let ga = a.gcd(&m);
            let beta0 = ga / ga.gcd(&b);
            let modulus = m / ga;
            let rhs = (-beta0 * b / ga).rem_euclid(modulus);
            let alpha0 = if modulus == 1 {
                0
            } else {
                let inv = (a / ga).extended_gcd(&modulus).x.rem_euclid(modulus);
                (rhs * inv).rem_euclid(modulus)
            };
            vec![(modulus, 0), (alpha0, beta0)]
        }
    };
    hermite_normal_form(&rows)
}

/// Full group invariants of `⟨r, s⟩`.
pub fn group_structure(r: &MonomialScalar, s: &MonomialScalar) -> GroupStructure {
    let basis = relation_lattice(r, s);
    let divisors = smith_divisors(&basis);
    let (tau, epsilon) = match basis.as_slice() {
        [] => (0, 0),
        [(a, b)] => {
            if *b == 0 {
                (0, 0)
            } else {
                (b.unsigned_abs(), -b.signum() * a)
            }
        }
        [(p, x), (_, q)] => {
            let e = x.extended_gcd(q);
            let tau = e.gcd.abs();
            let e = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
            let alpha = e.0 * p;
            let ell = p * q / tau;
            (tau as u64, (-alpha).rem_euclid(ell))
        }
        _ => unreachable!("Hermite basis has at most two rows"),
    };
    GroupStructure {
        group_rank: (2 - basis.len()) as u8,
        torsionfree: divisors.iter().all(|&d| d == 1),
        lattice_basis: basis,
        tau,
        epsilon,
        r_order: r.is_root_of_unity(),
        s_order: s.is_root_of_unity(),
    }
}

/// Whether `(α, β)` lies in the lattice spanned by an HNF basis.
pub fn lattice_contains(basis: &[LatticeVector], v: LatticeVector) -> bool {
    match basis {
        [] => v == (0, 0),
        [(a, b)] => {
            // v = t·(a, b) with a > 0, or a = 0 and b > 0
            if *a != 0 {
                v.0 % a == 0 && v.0 / a * b == v.1
            } else {
                v.0 == 0 && v.1 % b == 0
            }
        }
        [(p, x), (_, q)] => v.0 % p == 0 && (v.1 - v.0 / p * x) % q == 0,
        _ => false,
    }
}
