use alloc::format;
use alloc::sync::Arc;

use super::{gamma_free_f, inventory, witnesses, Classification, Trace, Verdict};
use crate::conformal::is_conformal_by_criteria;
use crate::pbw::Presentation;
use crate::scalar::{group_structure, CycloNumber};

/// The verdict assembled from the theorems for each parameter regime,
/// without going through the master theorems.
///
/// `γ` is first removed when `r ≠ 1`, then the split is on `f = 0`, on
/// conformality, and on whether `r` and `s` are roots of unity. Conformality
/// is decided by the support criteria rather than by solving for a witness.
pub fn classify_by_regime(pres: &Arc<Presentation>) -> Classification {
    let mut t = Trace::default();
    let (r, s) = (pres.r(), pres.s());
    let gs = group_structure(r, s);
    let normalise = !r.is_one() && !pres.gamma().is_zero();
    t.check("r != 1 and gamma != 0: pass to f((h + gamma)/(r - 1)), gamma = 0", normalise);
    let f = gamma_free_f(pres);
    let gamma = if normalise {
        CycloNumber::zero(f.field())
    } else {
        pres.gamma().clone()
    };
    let r_root = r.is_root_of_unity().is_some();
    let s_root = s.is_root_of_unity().is_some();
    let (rule, ufr, ufd) = if t.check("f = 0", f.is_zero()) {
        if t.check("gamma = 0", gamma.is_zero()) {
            // quantum affine 3-space
            ("regime.f_zero_gamma_zero", true, gs.torsionfree)
        } else {
            let ufd = !t.check("s is a root of unity", s_root) || t.check("s = 1", s.is_one());
            ("regime.f_zero_r_one", true, ufd)
        }
    } else if !t.check("f is conformal", is_conformal_by_criteria(&f, r, s, &gamma)) {
        let r_one = t.check("r = 1", r.is_one());
        let r_generic = !r_one && !t.check("r is a root of unity", r_root);
        let mono = t.check(format!("f = {f} is a monomial"), f.is_monomial());
        ("regime.f_nonconformal", !(r_generic && !mono), r_one || (r_generic && mono))
    } else if !t.check("r is a root of unity", r_root) {
        let mono = t.check(format!("f = {f} is a monomial"), f.is_monomial());
        let tau_pos = t.check(format!("tau = {} > 0", gs.tau), gs.tau > 0);
        let free = gs.torsionfree;
        let rank2 = t.check("<r, s> is free of rank 2", gs.group_rank == 2 && free);
        let rank1 = t.check("<r, s> is free of rank 1", gs.group_rank == 1 && free);
        ("regime.conformal_r_generic", tau_pos || mono, (rank2 && mono) || rank1)
    } else if !t.check("r = 1", r.is_one()) {
        ("regime.conformal_r_root", true, false)
    } else if !t.check("gamma = 0", gamma.is_zero()) {
        let constant = t.check("f is constant", f.is_constant());
        let ufr = t.check("s is a root of unity", s_root) || constant;
        let ufd = s.is_one() || (!s_root && constant);
        t.check("s = 1", s.is_one());
        ("regime.conformal_r_one_gamma_nonzero", ufr, ufd)
    } else if !t.check("s is a root of unity", s_root) {
        ("regime.conformal_r_one_gamma_zero_s_generic", true, true)
    } else {
        ("regime.conformal_r_one_gamma_zero_s_root", true, false)
    };
    let wit = witnesses(pres);
    let inventory = inventory::build(pres, &wit);
    Classification {
        verdict: Verdict::from_flags(ufr, ufd),
        fired_rule: rule,
        witnesses: Some(wit),
        inventory,
        trace: t.0,
    }
}
