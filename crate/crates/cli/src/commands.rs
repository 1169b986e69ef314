//! The work behind each subcommand, independent of argument parsing and
//! output.

use std::fmt::Write as _;
use std::sync::Arc;

use gdua_core::pbw::{check_power_identity, check_relations, normality_check, q_commutation_check, v_lambda_rep, z_element};
use gdua_core::{
    classify_downup, classify_downup_roots, classify_parameters, classify_parameters_by_regime, classify_smith,
    Classification, CycloNumber, Error, Parameters, Presentation,
};

use crate::parse::{parse_poly, parse_scalar, ParseError, Scalar};
use crate::report::{CheckDto, ClassificationDto, ErrorReport, InputEcho, InventoryDto, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Parse { field: &'static str, error: ParseError },
    Invalid(String),
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            _ => EXIT_USAGE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "syntax_error",
            CliError::Invalid(_) => "invalid_input",
            CliError::Unsupported(_) => "unsupported_scalar_form",
        }
    }

    pub fn report(&self) -> ErrorReport {
        let offset = match self {
            CliError::Parse { error, .. } => Some(error.offset),
            _ => None,
        };
        ErrorReport::new(self.kind(), self.to_string(), offset)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) | CliError::Unsupported(m) => f.write_str(m),
            CliError::Parse { field, error } => write!(f, "--{field}: {error}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedScalarForm(_) | Error::RootsNotRepresentable => CliError::Unsupported(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// Source text for one `L(f, r, s, γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GduaInput {
    pub f: String,
    pub r: String,
    pub s: String,
    pub gamma: String,
}

fn scalar(field: &'static str, text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|error| CliError::Parse { field, error })
}

impl GduaInput {
    pub fn parse(&self) -> Result<(Parameters, InputEcho), CliError> {
        let f = parse_poly(&self.f).map_err(|error| CliError::Parse { field: "f", error })?;
        let r = scalar("r", &self.r)?;
        let s = scalar("s", &self.s)?;
        let gamma = scalar("gamma", &self.gamma)?;
        let echo = InputEcho {
            f: Some(f.to_string()),
            r: Some(r.to_string()),
            s: Some(s.to_string()),
            gamma: Some(gamma.to_string()),
            ..InputEcho::default()
        };
        let params = Parameters {
            f,
            r: r.to_cyclo(),
            s: s.to_cyclo(),
            gamma: gamma.to_cyclo(),
        };
        Ok((params, echo))
    }

    fn presentation(&self) -> Result<(Arc<Presentation>, InputEcho), CliError> {
        let (params, echo) = self.parse()?;
        match params.presentation()? {
            Some(p) => Ok((p, echo)),
            None => Err(CliError::Invalid("r*s = 0: the algebra is not Noetherian".into())),
        }
    }
}

pub fn classify_cmd(input: &GduaInput) -> Result<Report, CliError> {
    let (params, echo) = input.parse()?;
    let c = classify_parameters(&params)?;
    let mut report = Report::new("classify", echo);
    report.classification = Some((&c).into());
    Ok(report)
}

pub fn inventory_cmd(input: &GduaInput) -> Result<Report, CliError> {
    let (params, echo) = input.parse()?;
    let c = classify_parameters(&params)?;
    let mut report = Report::new("inventory", echo);
    report.inventory = Some(InventoryDto::from(&c.inventory));
    Ok(report)
}

pub fn cross_check_cmd(input: &GduaInput) -> Result<Report, CliError> {
    let (params, echo) = input.parse()?;
    let master = classify_parameters(&params)?;
    let regime = classify_parameters_by_regime(&params)?;
    let mut report = Report::new("cross-check", echo);
    report.agree = Some(master.verdict == regime.verdict);
    report.classification = Some((&master).into());
    report.regime_classification = Some((&regime).into());
    Ok(report)
}

pub fn smith_cmd(f: &str) -> Result<Report, CliError> {
    let f = parse_poly(f).map_err(|error| CliError::Parse { field: "f", error })?;
    let c = classify_smith(&f);
    let echo = InputEcho {
        f: Some(f.to_string()),
        ..InputEcho::default()
    };
    let mut report = Report::new("classify-smith", echo);
    report.classification = Some((&c).into());
    Ok(report)
}

/// Either `(α, β)` or the roots `(r, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DownupInput {
    Coefficients { alpha: String, beta: String, gamma: String },
    Roots { r: String, s: String, gamma: String },
}

pub fn downup_cmd(input: &DownupInput) -> Result<Report, CliError> {
    let mut echo = InputEcho::default();
    let c = match input {
        DownupInput::Coefficients { alpha, beta, gamma } => {
            let alpha = scalar("alpha", alpha)?;
            let beta = scalar("beta", beta)?;
            let gamma = scalar("gamma", gamma)?;
            echo.alpha = Some(alpha.to_string());
            echo.beta = Some(beta.to_string());
            echo.gamma = Some(gamma.to_string());
            classify_downup(&alpha.to_cyclo(), &beta.to_cyclo(), &gamma.to_cyclo())?
        }
        DownupInput::Roots { r, s, gamma } => {
            let monomial = |name: &'static str, x: Scalar| match x {
                Scalar::Monomial(m) => Ok(m),
                Scalar::Cyclo(c) if c.is_zero() => Err(CliError::Invalid(format!("--{name} must be nonzero"))),
                Scalar::Cyclo(c) => Err(CliError::Unsupported(format!(
                    "--{name} = {c} is not a positive rational times a root of unity"
                ))),
            };
            let r = monomial("r", scalar("r", r)?)?;
            let s = monomial("s", scalar("s", s)?)?;
            let gamma = scalar("gamma", gamma)?;
            echo.r = Some(r.to_string());
            echo.s = Some(s.to_string());
            echo.gamma = Some(gamma.to_string());
            classify_downup_roots(&r, &s, &gamma.to_cyclo())
        }
    };
    let mut report = Report::new("classify-downup", echo);
    report.classification = Some((&c).into());
    Ok(report)
}

fn check(name: impl Into<String>, outcome: Result<bool, String>) -> CheckDto {
    let (status, detail) = match outcome {
        Ok(true) => ("pass", None),
        Ok(false) => ("fail", None),
        Err(reason) => ("skipped", Some(reason)),
    };
    CheckDto {
        check: name.into(),
        status: status.into(),
        detail,
    }
}

/// The identity suite: defining relations, `d·uᵏ` for `k ≤ max_k`,
/// q-commutation of `z`, q-commutation of every explicit inventory
/// generator, and one `V_λ` representation when `P_k` vanishes.
pub fn verify_cmd(input: &GduaInput, max_k: u32) -> Result<Report, CliError> {
    let (pres, echo) = input.presentation()?;
    let mut checks = vec![check("relations", Ok(check_relations(&pres)))];
    for k in 1..=max_k {
        let outcome = match check_power_identity(&pres, k) {
            Ok(b) => Ok(b),
            Err(e) => Err(e.to_string()),
        };
        checks.push(check(format!("d*u^{k} identity"), outcome));
    }
    let z = z_element(&pres)?;
    checks.push(check(
        "z = ud - g(h) q-commutes with (1/s, 1, s)",
        match z {
            Some(z) => {
                let s = pres.s_value();
                let expected = (s.inv()?, CycloNumber::one(pres.field()), s.clone());
                Ok(q_commutation_check(&z)? == Some(expected))
            }
            None => Err("f is not conformal".into()),
        },
    ));
    let c = gdua_core::classify(&pres);
    for d in &c.inventory.primes {
        let name = format!("inventory {} q-commutes", d.generator.as_str());
        let Some(nu) = d.sample_element(&pres) else {
            checks.push(check(name, Err("no single generator".into())));
            continue;
        };
        let mut dto = check(name, Ok(q_commutation_check(&nu)?.is_some()));
        if dto.status == "fail" && normality_check(&nu)?.is_some() {
            dto.detail = Some("normal (x*nu = nu*(lambda*x + mu)) but not q-central".into());
        }
        checks.push(dto);
    }
    checks.push(v_lambda_check(&pres, &c));
    let mut report = Report::new("verify", echo);
    report.identities = Some(checks);
    Ok(report)
}

fn v_lambda_check(pres: &Arc<Presentation>, c: &Classification) -> CheckDto {
    let name = "V_lambda representation";
    let Some(k) = c.witnesses.as_ref().and_then(|w| w.minimal_k) else {
        return check(name, Err("no k with P_k = 0".into()));
    };
    if !pres.gamma().is_zero() {
        return check(name, Err("needs gamma = 0".into()));
    }
    // P_k = 0, so any λ for which no smaller P_m vanishes will do
    for n in 1..=8 {
        let lambda = CycloNumber::from_integer(pres.field(), n);
        if let Ok(rep) = v_lambda_rep(pres, &lambda, k) {
            let mut dto = check(name, Ok(rep.verify(pres).is_ok()));
            dto.detail = Some(format!("lambda = {n}, dim = {}", rep.dim));
            return dto;
        }
    }
    check(name, Err("no lambda in 1..=8 with k minimal".into()))
}

/// The human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let i = &report.input;
    let field = |x: &Option<String>| x.clone().unwrap_or_default();
    match report.command.as_str() {
        "classify-downup" if i.alpha.is_some() => {
            let _ = writeln!(out, "A({}, {}, {})", field(&i.alpha), field(&i.beta), field(&i.gamma));
        }
        "classify-downup" => {
            let _ = writeln!(out, "L(h, {}, {}, {})", field(&i.r), field(&i.s), field(&i.gamma));
        }
        "classify-smith" => {
            let _ = writeln!(out, "S({})", field(&i.f));
        }
        _ => {
            let _ = writeln!(out, "L({}, {}, {}, {})", field(&i.f), field(&i.r), field(&i.s), field(&i.gamma));
        }
    }
    if let Some(c) = &report.classification {
        render_classification(&mut out, c, "");
    }
    if let Some(c) = &report.regime_classification {
        let _ = writeln!(out, "regime route:");
        render_classification(&mut out, c, "  ");
    }
    if let Some(agree) = report.agree {
        let _ = writeln!(out, "agree: {agree}");
    }
    if let Some(inv) = &report.inventory {
        render_inventory(&mut out, inv, "");
    }
    for c in report.identities.iter().flatten() {
        let detail = c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
        let _ = writeln!(out, "{:<8} {}{detail}", c.status, c.check);
    }
    out
}

fn render_classification(out: &mut String, c: &ClassificationDto, pad: &str) {
    let _ = writeln!(out, "{pad}verdict: {}", c.verdict);
    let _ = writeln!(out, "{pad}fired rule: {}", c.fired_rule);
    if let Some(w) = &c.witnesses {
        let opt = |x: Option<u32>| x.map_or("none".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{pad}conformal: {}{}",
            w.conformal,
            w.g.as_deref().map(|g| format!(" (g = {g})")).unwrap_or_default()
        );
        if let Some(wv) = &w.w {
            let _ = writeln!(out, "{pad}w = gamma/(r-1): {wv}");
        }
        let _ = writeln!(
            out,
            "{pad}<r, s>: rank {}, torsionfree {}, tau {}, epsilon {}, ord r {}, ord s {}",
            w.group_rank,
            w.torsionfree,
            w.tau,
            w.epsilon,
            opt(w.r_order),
            opt(w.s_order)
        );
        if let Some(k) = w.minimal_k {
            let _ = writeln!(out, "{pad}minimal k with P_k = 0: {k}");
        }
    }
    render_inventory(out, &c.inventory, pad);
    let _ = writeln!(out, "{pad}trace:");
    for t in &c.trace {
        let _ = writeln!(out, "{pad}  [{}] {}", if t.holds { "yes" } else { "no" }, t.condition);
    }
}

fn render_inventory(out: &mut String, inv: &InventoryDto, pad: &str) {
    let _ = writeln!(out, "{pad}height-one primes ({}):", inv.coverage);
    for p in &inv.primes {
        let mut line = format!("{pad}  {}", p.generator);
        if let Some(e) = p.exponent {
            let _ = write!(line, " exponent={e}");
        }
        if let Some(f) = &p.family_parameter {
            let _ = write!(line, " [{f}]");
        }
        if let Some(cp) = p.completely_prime {
            let _ = write!(line, " completely_prime={cp}");
        }
        if !p.principal {
            line.push_str(" non-principal");
        }
        let _ = writeln!(out, "{line}");
    }
}
