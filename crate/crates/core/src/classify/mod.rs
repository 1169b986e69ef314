//! The UFR/UFD decision for `L(f, r, s, γ)`.
//!
//! [`classify`] applies the two master theorems: `L` is a Noetherian UFR
//! unless `f ≠ 0` and one of three obstructions holds, and it is a UFD iff
//! it is a UFR and `⟨r, s⟩` is torsionfree. [`classify_by_regime`] reaches
//! its verdict along a different route, through the per-regime theorems, and
//! exists to cross-check the first.

mod adapters;
mod inventory;
mod regime;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::conformal::{conformal_witness, minimal_vanishing_k, normalize_gamma};
use crate::error::{Error, Result};
use crate::pbw::Presentation;
use crate::poly::Poly;
use crate::scalar::{group_structure, CycloNumber, LatticeVector, MonomialScalar};

pub use adapters::{classify_downup, classify_downup_roots, classify_smith, downup_roots};
pub use inventory::{prime_inventory, Coverage, GeneratorTag, Inventory, PrimeDescriptor};
pub use regime::classify_by_regime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    NotNoetherian,
    Ufd,
    UfrNotUfd,
    NotUfr,
}

impl Verdict {
    fn from_flags(ufr: bool, ufd: bool) -> Self {
        assert!(ufr || !ufd, "a UFD is always a UFR");
        match (ufr, ufd) {
            (true, true) => Verdict::Ufd,
            (true, false) => Verdict::UfrNotUfd,
            _ => Verdict::NotUfr,
        }
    }

    pub fn is_ufr(self) -> bool {
        matches!(self, Verdict::Ufd | Verdict::UfrNotUfd)
    }

    pub fn is_ufd(self) -> bool {
        self == Verdict::Ufd
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotNoetherian => "NOT_NOETHERIAN",
            Verdict::Ufd => "UFD",
            Verdict::UfrNotUfd => "UFR_NOT_UFD",
            Verdict::NotUfr => "NOT_UFR",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything the decision looked at, in a form that can be re-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses {
    pub conformal: bool,
    /// `g` with `f(h) = s·g(h) − g(rh − γ)`, when `f` is conformal.
    pub g: Option<Poly>,
    /// `w = γ/(r − 1)`; only defined for `r ≠ 1`.
    pub w: Option<CycloNumber>,
    /// Whether `f` has a root other than `w`; needs `r ≠ 1` and `f ≠ 0`.
    pub nontrivial_root: Option<bool>,
    pub lattice_basis: Vec<LatticeVector>,
    pub tau: u64,
    pub epsilon: i64,
    pub group_rank: u8,
    pub torsionfree: bool,
    pub r_order: Option<u32>,
    pub s_order: Option<u32>,
    /// Least `k > 0` with `P_k = 0`, computed for the `γ = 0` form of `f`.
    pub minimal_k: Option<u32>,
}

/// One condition the classifier evaluated, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub condition: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Which theorem or case decided the verdict, e.g. `"ThmB.case_a"`.
    pub fired_rule: &'static str,
    /// Absent only for non-Noetherian input.
    pub witnesses: Option<Witnesses>,
    pub inventory: Inventory,
    pub trace: Vec<TraceStep>,
}

#[derive(Default)]
struct Trace(Vec<TraceStep>);

impl Trace {
    fn check(&mut self, condition: impl Into<String>, holds: bool) -> bool {
        self.0.push(TraceStep {
            condition: condition.into(),
            holds,
        });
        holds
    }
}

/// `f` with `γ` removed by `f ↦ f((h + γ)/(r − 1))` when `r ≠ 1`; the
/// identity otherwise.
fn gamma_free_f(pres: &Presentation) -> Poly {
    if pres.gamma().is_zero() || pres.r().is_one() {
        pres.f().clone()
    } else {
        normalize_gamma(pres.f(), pres.r(), pres.gamma())
    }
}

/// `γ/(r − 1)` in the ambient field, for `r ≠ 1`.
fn w_value(pres: &Presentation) -> Option<CycloNumber> {
    if pres.r().is_one() {
        return None;
    }
    let one = CycloNumber::one(pres.field());
    Some(pres.gamma().try_div(&(pres.r_value() - &one)).expect("r != 1"))
}

pub(crate) fn witnesses(pres: &Presentation) -> Witnesses {
    let gs = group_structure(pres.r(), pres.s());
    let g = conformal_witness(pres.f(), pres.r(), pres.s(), pres.gamma()).map(|w| w.g().clone());
    let w = w_value(pres);
    let nontrivial_root = match (&w, pres.f().is_zero()) {
        (Some(w), false) => Some(pres.f().has_root_other_than(w).expect("f != 0")),
        _ => None,
    };
    let minimal_k = if pres.f().is_zero() || (pres.r().is_one() && !pres.gamma().is_zero()) {
        None
    } else {
        minimal_vanishing_k(&gamma_free_f(pres), pres.r(), pres.s()).expect("f != 0")
    };
    Witnesses {
        conformal: g.is_some(),
        g,
        w,
        nontrivial_root,
        lattice_basis: gs.lattice_basis,
        tau: gs.tau,
        epsilon: gs.epsilon,
        group_rank: gs.group_rank,
        torsionfree: gs.torsionfree,
        r_order: gs.r_order,
        s_order: gs.s_order,
        minimal_k,
    }
}

/// The master classifier.
///
/// `L` fails to be a Noetherian UFR exactly when `f ≠ 0` and one of
///
/// * (a) `f` is not conformal, `r` is not a root of unity and `f` has a
///   root other than `w = γ/(r − 1)`;
/// * (b) `f` is conformal, `⟨r, s⟩` is free abelian of rank 2 and `f` has a
///   root other than `w`;
/// * (c) `γ ≠ 0`, `r = 1`, `s` is not a root of unity and `deg f ≥ 1`
///
/// holds. It is a UFD iff it is a UFR and `⟨r, s⟩` is torsionfree.
///
/// At `r = 1` the point `w` is undefined, but (a) and (b) cannot hold there
/// anyway (non-conformality at `r = 1` forces `s = 1`, `γ = 0`, and `⟨1, s⟩`
/// has rank at most 1), so both are skipped.
pub fn classify(pres: &Arc<Presentation>) -> Classification {
    let wit = witnesses(pres);
    let mut t = Trace::default();
    let f = pres.f();
    let mut fired = None;
    if t.check("f != 0", !f.is_zero()) {
        let root = wit.nontrivial_root == Some(true);
        let w_text = wit.w.as_ref().map(|w| format!("{w}")).unwrap_or_default();
        if t.check("r = 1 (cases a and b are vacuous)", pres.r().is_one()) {
            // w undefined; nothing to evaluate for (a) or (b)
        } else {
            let case_a = t.check("case a: f is not conformal", !wit.conformal)
                && t.check("case a: r is not a root of unity", wit.r_order.is_none())
                && t.check(format!("case a: f has a root other than w = {w_text}"), root);
            let case_b = !case_a
                && t.check("case b: f is conformal", wit.conformal)
                && t.check("case b: <r, s> has rank 2", wit.group_rank == 2)
                && t.check("case b: <r, s> is torsionfree", wit.torsionfree)
                && t.check(format!("case b: f has a root other than w = {w_text}"), root);
            if case_a {
                fired = Some("ThmB.case_a");
            } else if case_b {
                fired = Some("ThmB.case_b");
            }
        }
        if fired.is_none()
            && t.check("case c: gamma != 0", !pres.gamma().is_zero())
            && t.check("case c: r = 1", pres.r().is_one())
            && t.check("case c: s is not a root of unity", wit.s_order.is_none())
            && t.check("case c: deg f >= 1", f.degree().is_some_and(|d| d >= 1))
        {
            fired = Some("ThmB.case_c");
        }
    }
    let (verdict, fired_rule) = match fired {
        Some(rule) => (Verdict::NotUfr, rule),
        None if t.check("<r, s> is torsionfree", wit.torsionfree) => (Verdict::Ufd, "ThmA.ufd"),
        None => (Verdict::UfrNotUfd, "ThmA.torsion"),
    };
    let inventory = inventory::build(pres, &wit);
    Classification {
        verdict,
        fired_rule,
        witnesses: Some(wit),
        inventory,
        trace: t.0,
    }
}

/// Raw input, before `r` and `s` are checked to be monomial scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameters {
    pub f: Poly,
    pub r: CycloNumber,
    pub s: CycloNumber,
    pub gamma: CycloNumber,
}

impl Parameters {
    /// `None` when `r·s = 0`, where the algebra is not Noetherian.
    pub fn presentation(&self) -> Result<Option<Arc<Presentation>>> {
        if self.r.is_zero() || self.s.is_zero() {
            return Ok(None);
        }
        let mono = |name: &str, x: &CycloNumber| -> Result<MonomialScalar> {
            x.as_monomial().ok_or_else(|| {
                Error::UnsupportedScalarForm(format!(
                    "{name} = {x} is not a positive rational times a root of unity"
                ))
            })
        };
        let r = mono("r", &self.r)?;
        let s = mono("s", &self.s)?;
        Ok(Some(Presentation::new(&self.f, &r, &s, &self.gamma)))
    }
}

fn not_noetherian() -> Classification {
    Classification {
        verdict: Verdict::NotNoetherian,
        fired_rule: "Noetherian.rs_zero",
        witnesses: None,
        inventory: Inventory {
            coverage: Coverage::PartialList,
            primes: Vec::new(),
        },
        trace: alloc::vec![TraceStep {
            condition: "r*s = 0".into(),
            holds: true,
        }],
    }
}

/// [`classify`] on raw parameters; `r·s = 0` gives `NOT_NOETHERIAN`.
pub fn classify_parameters(p: &Parameters) -> Result<Classification> {
    Ok(p.presentation()?.map_or_else(not_noetherian, |pres| classify(&pres)))
}

/// [`classify_by_regime`] on raw parameters.
pub fn classify_parameters_by_regime(p: &Parameters) -> Result<Classification> {
    Ok(p.presentation()?
        .map_or_else(not_noetherian, |pres| classify_by_regime(&pres)))
}
