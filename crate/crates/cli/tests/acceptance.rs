//! The acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion over all of them. Every check is exact; there are no
//! tolerances to tune.
//!
//! Run with `cargo test -p gdua-cli --test acceptance -- --nocapture` to see
//! the report.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use gdua_cli::parse::{parse_poly, parse_scalar, Scalar};
use gdua_cli::run;
use gdua_core::conformal::{
    conformal_witness, is_conformal_by_criteria, minimal_vanishing_k, p_k, p_k_closed_form, p_k_coefficient,
};
use gdua_core::pbw::{
    check_power_identity, check_relations, normality_check, q_commutation_check, v_lambda_rep, z_element,
};
use gdua_core::scalar::{lattice_contains, smith_divisors};
use gdua_core::{
    classify, classify_by_regime, classify_smith, group_structure, prime_inventory, relation_lattice,
    AlgebraElement, Coverage, CycloNumber, CyclotomicField, MonomialScalar, Poly, Presentation, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID_SCALARS: [&str; 12] = ["1", "-1", "zeta(3)", "zeta(4)", "zeta(6)", "2", "1/2", "3", "2*zeta(3)", "8", "4", "-2"];
const GRID_POLYS: [&str; 9] = ["0", "1", "h", "h^2", "h^3", "h - 1", "h*(h - 1)", "(h - 1)^2", "h^2 + h"];
const GRID_GAMMAS: [i64; 2] = [0, 1];

/// Box for brute-force relation search.
const BOX: i64 = 6;
/// Largest k for `d·uᵏ` and the `P_k` comparisons.
const MAX_K: u32 = 6;
const ASSOC_TRIPLES: usize = 200;
const SMITH_SAMPLES: usize = 50;
const ROUND_TRIPS: usize = 500;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Grid) -> Outcome);

fn mono(text: &str) -> MonomialScalar {
    match parse_scalar(text).unwrap() {
        Scalar::Monomial(m) => m,
        Scalar::Cyclo(c) => panic!("{c} is not a monomial scalar"),
    }
}

fn int(field: &Arc<CyclotomicField>, n: i64) -> CycloNumber {
    CycloNumber::from_integer(field, n)
}

fn presentation(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, gamma: i64) -> Arc<Presentation> {
    Presentation::new(f, r, s, &int(&CyclotomicField::new(1), gamma))
}

struct Grid {
    scalars: Vec<MonomialScalar>,
    polys: Vec<Poly>,
    presentations: Vec<Arc<Presentation>>,
}

fn grid() -> Grid {
    let scalars: Vec<_> = GRID_SCALARS.iter().map(|s| mono(s)).collect();
    let polys: Vec<_> = GRID_POLYS.iter().map(|p| parse_poly(p).unwrap()).collect();
    let mut presentations = Vec::new();
    for f in &polys {
        for r in &scalars {
            for s in &scalars {
                for &g in &GRID_GAMMAS {
                    presentations.push(presentation(f, r, s, g));
                }
            }
        }
    }
    Grid {
        scalars,
        polys,
        presentations,
    }
}

fn same_poly(a: &Poly, b: &Poly) -> bool {
    let field = CyclotomicField::common([a.ambient_order(), b.ambient_order()]);
    a.lift(&field).unwrap() == b.lift(&field).unwrap()
}

fn is_relation(r: &MonomialScalar, s: &MonomialScalar, a: i64, b: i64) -> bool {
    r.pow(a).mul(&s.pow(b)).is_one()
}

/// `⟨r, s⟩` has torsion iff some `v ∉ Λ` has a multiple in `Λ`. Every grid
/// scalar has root order dividing 12, so multiples up to 12 suffice.
fn torsionfree_by_search(r: &MonomialScalar, s: &MonomialScalar) -> bool {
    for a in -BOX..=BOX {
        for b in -BOX..=BOX {
            if !is_relation(r, s, a, b) && (2..=12).any(|n| is_relation(r, s, n * a, n * b)) {
                return false;
            }
        }
    }
    true
}

fn gamma_is_zero(p: &Presentation) -> bool {
    p.gamma().is_zero()
}

fn criterion_1(g: &Grid) -> Outcome {
    let h = parse_poly("h").unwrap();
    let one = MonomialScalar::one();
    let two = mono("2");
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Verdict, want: Verdict| {
        if got != want {
            bad.push(format!("{what}: got {got}, want {want}"));
        }
    };
    expect("U(sl2)".into(), classify(&presentation(&h, &one, &one, 1)).verdict, Verdict::Ufd);
    expect("Heisenberg".into(), classify(&presentation(&h, &one, &one, 0)).verdict, Verdict::Ufd);
    expect("L(h,2,1,1)".into(), classify(&presentation(&h, &two, &one, 1)).verdict, Verdict::NotUfr);
    expect("L(h,2,2,1)".into(), classify(&presentation(&h, &two, &two, 1)).verdict, Verdict::NotUfr);

    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let q = CyclotomicField::new(1);
    for _ in 0..SMITH_SAMPLES {
        let deg = rng.gen_range(0..=6);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        let f = Poly::from_integers(&q, &coeffs);
        expect(format!("S({f})"), classify_smith(&f).verdict, Verdict::Ufd);
        expect(format!("L({f},1,1,1)"), classify(&presentation(&f, &one, &one, 1)).verdict, Verdict::Ufd);
    }

    let zero = Poly::zero(&q);
    let mut affine = 0;
    for r in &g.scalars {
        for s in &g.scalars {
            let want = if torsionfree_by_search(r, s) { Verdict::Ufd } else { Verdict::UfrNotUfd };
            expect(format!("L(0,{r},{s},0)"), classify(&presentation(&zero, r, s, 0)).verdict, want);
            affine += 1;
        }
    }
    if bad.is_empty() {
        Ok(format!("4 named algebras, {SMITH_SAMPLES} Smith algebras, {affine} quantum affine spaces"))
    } else {
        Err(format!("{} mismatches, first: {}", bad.len(), bad[0]))
    }
}

fn criterion_2(g: &Grid) -> Outcome {
    let disagreements: Vec<String> = g
        .presentations
        .iter()
        .filter_map(|p| {
            let (a, b) = (classify(p), classify_by_regime(p));
            (a.verdict != b.verdict).then(|| format!("{p:?}: {} vs {}", a.verdict, b.verdict))
        })
        .collect();
    match disagreements.first() {
        None => Ok(format!("{} presentations, 0 disagreements", g.presentations.len())),
        Some(first) => Err(format!("{} disagreements, first: {first}", disagreements.len())),
    }
}

fn criterion_3(g: &Grid) -> Outcome {
    let mut violations = Vec::new();
    for p in &g.presentations {
        let c = classify(p);
        let torsionfree = torsionfree_by_search(p.r(), p.s());
        if c.verdict.is_ufd() != (c.verdict.is_ufr() && torsionfree) {
            violations.push(format!("{p:?}: {} with torsionfree = {torsionfree}", c.verdict));
        }
        if c.witnesses.as_ref().is_some_and(|w| w.torsionfree != torsionfree) {
            violations.push(format!("{p:?}: witness torsionfree disagrees with search"));
        }
    }
    match violations.first() {
        None => Ok(format!("{} presentations, 0 violations", g.presentations.len())),
        Some(first) => Err(format!("{} violations, first: {first}", violations.len())),
    }
}

/// `P_k` assembled from the per-coefficient formula only.
fn p_k_by_coefficients(f: &Poly, r: &MonomialScalar, s: &MonomialScalar, k: u32) -> Poly {
    let coeffs: Vec<CycloNumber> = (0..f.coeffs().len()).map(|m| p_k_coefficient(f, r, s, k, m)).collect();
    match coeffs.first() {
        Some(c) => Poly::from_coeffs(&c.field().clone(), coeffs),
        None => Poly::zero(f.field()),
    }
}

fn random_element(rng: &mut ChaCha8Rng, p: &Arc<Presentation>) -> AlgebraElement {
    let mut x = AlgebraElement::zero(p);
    for _ in 0..rng.gen_range(1..=3) {
        let c = int(p.field(), rng.gen_range(-3..=3));
        let m = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
        x = x.try_add(&AlgebraElement::monomial(p, &c, m).unwrap()).unwrap();
    }
    x
}

fn criterion_4(g: &Grid) -> Outcome {
    let mut failures = Vec::new();
    let (mut power_checks, mut z_checks) = (0, 0);
    for p in &g.presentations {
        if !check_relations(p) {
            failures.push(format!("{p:?}: defining relations"));
        }
        if gamma_is_zero(p) {
            let u = AlgebraElement::u(p);
            let d = AlgebraElement::d(p);
            for k in 1..=MAX_K {
                let uk = u.pow(k);
                let lhs = d.multiply(&uk).unwrap();
                let pk = p_k_by_coefficients(p.f(), p.r(), p.s(), k).lift(p.field()).unwrap();
                let rhs = uk
                    .multiply(&d)
                    .unwrap()
                    .scale(&p.s_value().pow(k.into()).unwrap())
                    .try_sub(&AlgebraElement::from_h_poly(p, &pk).unwrap().multiply(&u.pow(k - 1)).unwrap())
                    .unwrap();
                if lhs != rhs || !check_power_identity(p, k).unwrap() {
                    failures.push(format!("{p:?}: d*u^{k}"));
                }
                power_checks += 1;
            }
        }
        if let Some(z) = z_element(p).unwrap() {
            let s = p.s_value();
            let want = (s.inv().unwrap(), CycloNumber::one(p.field()), s.clone());
            if q_commutation_check(&z).unwrap() != Some(want) {
                failures.push(format!("{p:?}: z q-commutation"));
            }
            z_checks += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..ASSOC_TRIPLES {
        let p = &g.presentations[rng.gen_range(0..g.presentations.len())];
        let (a, b, c) = (random_element(&mut rng, p), random_element(&mut rng, p), random_element(&mut rng, p));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        if left != right {
            failures.push(format!("{p:?}: associativity"));
        }
    }
    match failures.first() {
        None => Ok(format!(
            "relations on {}, {power_checks} d*u^k identities, {ASSOC_TRIPLES} triples, {z_checks} z checks",
            g.presentations.len()
        )),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

/// `f(x) = s·g(x) − g(r·x − γ)` at enough integer points to pin down a
/// polynomial identity.
fn witness_holds_pointwise(p: &Presentation, gp: &Poly) -> bool {
    let field = CyclotomicField::common([p.field().order(), gp.ambient_order()]);
    let f = p.f().lift(&field).unwrap();
    let gp = gp.lift(&field).unwrap();
    let r = p.r_value().lift(&field).unwrap();
    let s = p.s_value().lift(&field).unwrap();
    let gamma = p.gamma().lift(&field).unwrap();
    let points = f.degree().unwrap_or(0).max(gp.degree().unwrap_or(0)) as i64 + 2;
    (0..points).all(|t| {
        let x = int(&field, t);
        let shifted = &(&r * &x) - &gamma;
        f.eval(&x) == &(&s * &gp.eval(&x)) - &gp.eval(&shifted)
    })
}

fn criterion_5(g: &Grid) -> Outcome {
    let mut failures = Vec::new();
    let mut witnesses = 0;
    for p in &g.presentations {
        let w = conformal_witness(p.f(), p.r(), p.s(), p.gamma());
        if w.is_some() != is_conformal_by_criteria(p.f(), p.r(), p.s(), p.gamma()) {
            failures.push(format!("{p:?}: solvability vs criteria"));
        }
        if let Some(w) = w {
            witnesses += 1;
            if !witness_holds_pointwise(p, w.g()) {
                failures.push(format!("{p:?}: g = {} does not verify", w.g()));
            }
        }
    }
    match failures.first() {
        None => Ok(format!("{} presentations, {witnesses} witnesses verified", g.presentations.len())),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

/// lcm of the orders of `s·r⁻ᵐ` over the support, if all are nontrivial
/// roots of unity.
fn lcm_of_orders(f: &Poly, r: &MonomialScalar, s: &MonomialScalar) -> Option<u32> {
    let mut k = 1u32;
    for m in f.support() {
        match s.mul(&r.pow(-(m as i64))).is_root_of_unity() {
            Some(n) if n > 1 => k = num_lcm(k, n),
            _ => return None,
        }
    }
    Some(k)
}

fn num_lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn criterion_6(g: &Grid) -> Outcome {
    let zero_gamma = int(&CyclotomicField::new(1), 0);
    let mut failures = Vec::new();
    let (mut triples, mut vanishing) = (0, 0);
    for f in &g.polys {
        for r in &g.scalars {
            for s in &g.scalars {
                let witness = conformal_witness(f, r, s, &zero_gamma);
                for k in 0..=MAX_K {
                    let sum = p_k(f, r, s, k).p_k;
                    let by_coeff = p_k_by_coefficients(f, r, s, k);
                    let mut ok = same_poly(&sum, &by_coeff);
                    if let Some(w) = &witness {
                        ok &= same_poly(&sum, &p_k_closed_form(w.g(), r, s, k));
                    }
                    if !ok {
                        failures.push(format!("P_{k} for f = {f}, r = {r}, s = {s}"));
                    }
                    triples += 1;
                }
                if f.is_zero() {
                    continue;
                }
                let got = minimal_vanishing_k(f, r, s).unwrap();
                // first vanishing P_k by summation; every grid order divides 12
                let searched = (1..=24).find(|&k| p_k(f, r, s, k).p_k.is_zero());
                if got != lcm_of_orders(f, r, s) || got != searched {
                    failures.push(format!("minimal k for f = {f}, r = {r}, s = {s}: {got:?} vs {searched:?}"));
                }
                vanishing += 1;
            }
        }
    }
    match failures.first() {
        None => Ok(format!("{triples} P_k comparisons, {vanishing} minimal-k checks")),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

fn criterion_7(g: &Grid) -> Outcome {
    let mut failures = Vec::new();
    for r in &g.scalars {
        for s in &g.scalars {
            let basis = relation_lattice(r, s);
            let gs = group_structure(r, s);
            let tag = format!("r = {r}, s = {s}");
            for a in -BOX..=BOX {
                for b in -BOX..=BOX {
                    if lattice_contains(&basis, (a, b)) != is_relation(r, s, a, b) {
                        failures.push(format!("{tag}: membership of ({a}, {b})"));
                    }
                }
            }
            if !basis.iter().all(|&(a, b)| is_relation(r, s, a, b)) {
                failures.push(format!("{tag}: basis row is not a relation"));
            }
            if gs.lattice_basis != basis || usize::from(gs.group_rank) != 2 - basis.len() {
                failures.push(format!("{tag}: rank or basis"));
            }
            let tau = gs.tau as i64;
            if tau > 0 && !s.pow(tau).mul(&r.pow(-gs.epsilon)).is_one() {
                failures.push(format!("{tag}: s^tau != r^epsilon"));
            }
            // no smaller positive power of s lies in ⟨r⟩
            let limit = if tau > 0 { tau - 1 } else { BOX };
            if (1..=limit).any(|i| (-4 * BOX..=4 * BOX).any(|j| s.pow(i).mul(&r.pow(-j)).is_one())) {
                failures.push(format!("{tag}: tau = {tau} is not minimal"));
            }
            let snf_trivial = smith_divisors(&basis).iter().all(|&d| d == 1);
            let searched = torsionfree_by_search(r, s);
            if gs.torsionfree != snf_trivial || gs.torsionfree != searched {
                failures.push(format!("{tag}: torsionfree"));
            }
        }
    }
    match failures.first() {
        None => Ok(format!("{} scalar pairs, box |a|,|b| <= {BOX}", g.scalars.len().pow(2))),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

type Matrix = Vec<Vec<CycloNumber>>;

fn mat_mul(a: &Matrix, b: &Matrix, field: &Arc<CyclotomicField>) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(int(field, 0), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

fn mat_comb(terms: &[(&Matrix, CycloNumber)], n: usize, field: &Arc<CyclotomicField>) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| terms.iter().fold(int(field, 0), |acc, (m, c)| &acc + &(&m[i][j] * c)))
                .collect()
        })
        .collect()
}

fn all_zero(m: &Matrix) -> bool {
    m.iter().flatten().all(CycloNumber::is_zero)
}

/// The defining relations and `Dᵏ = Uᵏ = 0`, recomputed from scratch.
fn rep_is_valid(p: &Presentation, d: &Matrix, u: &Matrix, h: &Matrix) -> bool {
    let field = p.field();
    let n = d.len();
    let one = int(field, 1);
    let (r, s, gamma) = (p.r_value().clone(), p.s_value().clone(), p.gamma().clone());
    let identity: Matrix = (0..n).map(|i| (0..n).map(|j| int(field, i64::from(i == j))).collect()).collect();
    let mut f_h = mat_comb(&[], n, field);
    let mut h_pow = identity.clone();
    for c in p.f().coeffs() {
        f_h = mat_comb(&[(&f_h, one.clone()), (&h_pow, c.clone())], n, field);
        h_pow = mat_mul(&h_pow, h, field);
    }
    let rel1 = mat_comb(&[(&mat_mul(d, h, field), one.clone()), (&mat_mul(h, d, field), -&r), (d, gamma.clone())], n, field);
    let rel2 = mat_comb(&[(&mat_mul(h, u, field), one.clone()), (&mat_mul(u, h, field), -&r), (u, gamma)], n, field);
    let rel3 = mat_comb(&[(&mat_mul(d, u, field), one.clone()), (&mat_mul(u, d, field), -&s), (&f_h, one)], n, field);
    let nilpotent = |m: &Matrix| all_zero(&(0..n).fold(identity.clone(), |acc, _| mat_mul(&acc, m, field)));
    all_zero(&rel1) && all_zero(&rel2) && all_zero(&rel3) && nilpotent(d) && nilpotent(u)
}

fn criterion_8(g: &Grid) -> Outcome {
    let mut failures = Vec::new();
    let mut reps = 0;
    for p in g.presentations.iter().filter(|p| gamma_is_zero(p) && !p.f().is_zero()) {
        let Some(k) = minimal_vanishing_k(p.f(), p.r(), p.s()).unwrap() else {
            continue;
        };
        // λ with P_k(r^{k−1}λ) = 0 and no earlier P_m(r^{m−1}λ) = 0
        let chosen = (1..=8).find_map(|l| {
            let lambda = int(p.field(), l);
            let r = p.r_value();
            let ok = (1..k).all(|m| {
                let x = &r.pow(i64::from(m) - 1).unwrap() * &lambda;
                !p_k(p.f(), p.r(), p.s(), m).p_k.lift(p.field()).unwrap().eval(&x).is_zero()
            });
            ok.then_some(lambda)
        });
        let Some(lambda) = chosen else {
            failures.push(format!("{p:?}: no lambda in 1..=8"));
            continue;
        };
        match v_lambda_rep(p, &lambda, k) {
            Ok(rep) if rep.dim == k as usize && rep_is_valid(p, &rep.d, &rep.u, &rep.h) => reps += 1,
            Ok(_) => failures.push(format!("{p:?}: matrices fail the relations")),
            Err(e) => failures.push(format!("{p:?}: {e}")),
        }
    }
    match (failures.first(), reps) {
        (None, 0) => Err("no presentation in the root-of-unity regime".into()),
        (None, n) => Ok(format!("{n} representations verified")),
        (Some(first), _) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

/// The three regimes in which every height-one prime is known.
fn complete_regime(p: &Presentation) -> bool {
    let f = p.f();
    let r_one = p.r().is_one();
    let s_one = p.s().is_one();
    let gamma_zero = gamma_is_zero(p);
    let conformal = is_conformal_by_criteria(f, p.r(), p.s(), p.gamma());
    (f.is_zero() && r_one && !gamma_zero)
        || (!f.is_zero() && conformal && r_one && gamma_zero && p.s().is_root_of_unity().is_none())
        || (f.is_constant() && !f.is_zero() && s_one && gamma_zero)
}

fn criterion_9(g: &Grid) -> Outcome {
    let mut not_q_central = BTreeSet::new();
    let mut still_normal = 0;
    let mut coverage_wrong = Vec::new();
    let mut samples = 0;
    for p in &g.presentations {
        let inv = prime_inventory(p);
        for prime in &inv.primes {
            if let Some(x) = prime.sample_element(p) {
                samples += 1;
                if q_commutation_check(&x).unwrap().is_none() {
                    not_q_central.insert(format!("{} in {p:?}", prime.generator.as_str()));
                    still_normal += usize::from(normality_check(&x).unwrap().is_some());
                }
            }
        }
        if (inv.coverage == Coverage::CompleteList) != complete_regime(p) {
            coverage_wrong.push(format!("{p:?}: {}", inv.coverage.as_str()));
        }
    }
    let mut problems = Vec::new();
    if !not_q_central.is_empty() {
        let tags: BTreeSet<&str> = not_q_central.iter().map(|s| s.split(' ').next().unwrap()).collect();
        problems.push(format!(
            "{} generators are not q-central (tags {:?}; {still_normal} of them carry a normality certificate), first: {}",
            not_q_central.len(),
            tags,
            not_q_central.first().unwrap()
        ));
    }
    if let Some(first) = coverage_wrong.first() {
        problems.push(format!("{} coverage mismatches, first: {first}", coverage_wrong.len()));
    }
    if problems.is_empty() {
        Ok(format!("{samples} generators q-central, coverage exact"))
    } else {
        Err(problems.join("; "))
    }
}

fn gdua(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gdua").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn gen_root(rng: &mut ChaCha8Rng) -> String {
    let n = [1, 2, 3, 4, 5, 6, 8, 12][rng.gen_range(0..8)];
    if rng.gen_bool(0.5) {
        format!("zeta({n})^{}", rng.gen_range(-7..=7))
    } else {
        format!("zeta({n})")
    }
}

fn gen_scalar_term(rng: &mut ChaCha8Rng) -> String {
    if rng.gen_bool(0.3) {
        return gen_root(rng);
    }
    let mut q = rng.gen_range(0..=40).to_string();
    if rng.gen_bool(0.4) {
        q = format!("{q}/{}", rng.gen_range(1..=9));
    }
    if rng.gen_bool(0.5) {
        q = format!("{q}*{}", gen_root(rng));
    }
    q
}

fn gen_sum(rng: &mut ChaCha8Rng, max_terms: usize, term: fn(&mut ChaCha8Rng) -> String) -> String {
    let mut out = if rng.gen_bool(0.3) { "-".to_string() } else { String::new() };
    for i in 0..rng.gen_range(1..=max_terms) {
        if i > 0 {
            out.push_str(if rng.gen_bool(0.5) { " - " } else { " + " });
        }
        out.push_str(&term(rng));
    }
    out
}

fn gen_poly_term(rng: &mut ChaCha8Rng) -> String {
    let power = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.7) {
            format!("h^{}", rng.gen_range(0..=5))
        } else {
            "h".to_string()
        }
    };
    match rng.gen_range(0..4) {
        0 => gen_scalar_term(rng),
        1 => format!("{}*{}", gen_scalar_term(rng), power(rng)),
        2 => format!("({})*{}", gen_sum(rng, 3, gen_scalar_term), power(rng)),
        _ => power(rng),
    }
}

fn criterion_10(_: &Grid) -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..ROUND_TRIPS {
        if i % 2 == 0 {
            let text = gen_sum(&mut rng, 4, gen_poly_term);
            let p = parse_poly(&text).unwrap();
            if parse_poly(&p.to_string()).unwrap() != p {
                failures.push(format!("poly {text} -> {p}"));
            }
        } else {
            let text = gen_sum(&mut rng, 3, gen_scalar_term);
            let x = parse_scalar(&text).unwrap();
            if parse_scalar(&x.to_string()).unwrap() != x {
                failures.push(format!("scalar {text} -> {x}"));
            }
        }
    }

    let json_args: [&[&str]; 3] = [
        &["classify", "--f", "h^2 - 1", "--r", "zeta(3)", "--s", "2", "--gamma", "1", "--json"],
        &["inventory", "--f", "0", "--r", "1", "--s", "zeta(3)", "--gamma", "1", "--json"],
        &["cross-check", "--f", "h", "--r", "-2", "--s", "1/2", "--json"],
    ];
    for args in json_args {
        let first = gdua(args).1;
        if (0..3).any(|_| gdua(args).1 != first) {
            failures.push(format!("JSON for {args:?} is not byte-stable"));
        }
    }

    let exits: [(&[&str], i32); 4] = [
        (&["classify", "--f", "h", "--r", "1", "--s", "1", "--gamma", "1"], 0),
        (&["classify", "--f", "h^", "--r", "1", "--s", "1"], 1),
        (&["classify", "--f", "h", "--r", "1+zeta(4)", "--s", "1"], 2),
        (&["verify", "--f", "0", "--r", "1", "--s", "2", "--gamma", "1"], 3),
    ];
    for (args, want) in exits {
        let got = gdua(args).0;
        if got != want {
            failures.push(format!("exit code {got} != {want} for {args:?}"));
        }
    }
    match failures.first() {
        None => Ok(format!("{ROUND_TRIPS} round trips, byte-stable JSON, exit codes 0 1 2 3")),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let g = grid();
    let criteria: [Criterion; 10] = [
        ("golden classifications", criterion_1),
        ("master and regime classifiers agree", criterion_2),
        ("UFD iff UFR and torsionfree", criterion_3),
        ("PBW identities", criterion_4),
        ("conformality witness vs criteria", criterion_5),
        ("P_k agreement and minimal k", criterion_6),
        ("relation lattice vs brute force", criterion_7),
        ("V_lambda representations", criterion_8),
        ("prime inventory soundness", criterion_9),
        ("CLI round trip, JSON, exit codes", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&g)))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS {name} ({detail})", i + 1),
            Err(detail) => {
                println!("criterion {:>2}: FAIL {name} ({detail})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("elapsed: {:.1}s", start.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
