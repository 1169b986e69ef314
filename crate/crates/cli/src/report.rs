//! The JSON report schema. Field order is declaration order, so equal
//! inputs serialize to identical bytes.

use gdua_core::{Classification, Inventory, PrimeDescriptor, TraceStep, Witnesses};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classification: Option<ClassificationDto>,
    /// Only for `cross-check`: the regime route's answer.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub regime_classification: Option<ClassificationDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inventory: Option<InventoryDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identities: Option<Vec<CheckDto>>,
}

/// The parsed input, re-printed canonically. Absent keys were not part of
/// the input form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDto {
    pub verdict: String,
    pub fired_rule: String,
    pub witnesses: Option<WitnessesDto>,
    pub inventory: InventoryDto,
    pub trace: Vec<TraceDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessesDto {
    pub conformal: bool,
    pub g: Option<String>,
    pub w: Option<String>,
    pub nontrivial_root: Option<bool>,
    pub lattice_basis: Vec<[i64; 2]>,
    pub tau: u64,
    pub epsilon: i64,
    pub group_rank: u8,
    pub torsionfree: bool,
    pub r_order: Option<u32>,
    pub s_order: Option<u32>,
    pub minimal_k: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InventoryDto {
    pub coverage: String,
    pub primes: Vec<PrimeDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDto {
    pub generator: String,
    pub exponent: Option<u32>,
    pub family_parameter: Option<String>,
    pub completely_prime: Option<bool>,
    pub principal: bool,
    pub coverage: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDto {
    pub condition: String,
    pub holds: bool,
}

/// One entry of the `verify` suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub check: String,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema_version: String,
    pub error: ErrorDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDto {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub offset: Option<usize>,
}

impl From<&Witnesses> for WitnessesDto {
    fn from(w: &Witnesses) -> Self {
        WitnessesDto {
            conformal: w.conformal,
            g: w.g.as_ref().map(ToString::to_string),
            w: w.w.as_ref().map(ToString::to_string),
            nontrivial_root: w.nontrivial_root,
            lattice_basis: w.lattice_basis.iter().map(|&(a, b)| [a, b]).collect(),
            tau: w.tau,
            epsilon: w.epsilon,
            group_rank: w.group_rank,
            torsionfree: w.torsionfree,
            r_order: w.r_order,
            s_order: w.s_order,
            minimal_k: w.minimal_k,
        }
    }
}

impl From<&PrimeDescriptor> for PrimeDto {
    fn from(p: &PrimeDescriptor) -> Self {
        PrimeDto {
            generator: p.generator.as_str().into(),
            exponent: p.exponent,
            family_parameter: p.family_parameter.map(Into::into),
            completely_prime: p.completely_prime,
            principal: p.principal,
            coverage: p.coverage.as_str().into(),
        }
    }
}

impl From<&Inventory> for InventoryDto {
    fn from(inv: &Inventory) -> Self {
        InventoryDto {
            coverage: inv.coverage.as_str().into(),
            primes: inv.primes.iter().map(Into::into).collect(),
        }
    }
}

impl From<&TraceStep> for TraceDto {
    fn from(t: &TraceStep) -> Self {
        TraceDto {
            condition: t.condition.clone(),
            holds: t.holds,
        }
    }
}

impl From<&Classification> for ClassificationDto {
    fn from(c: &Classification) -> Self {
        ClassificationDto {
            verdict: c.verdict.as_str().into(),
            fired_rule: c.fired_rule.into(),
            witnesses: c.witnesses.as_ref().map(Into::into),
            inventory: (&c.inventory).into(),
            trace: c.trace.iter().map(Into::into).collect(),
        }
    }
}

impl Report {
    pub fn new(command: &str, input: InputEcho) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            input,
            classification: None,
            regime_classification: None,
            agree: None,
            inventory: None,
            identities: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl ErrorReport {
    pub fn new(kind: &str, message: String, offset: Option<usize>) -> Self {
        ErrorReport {
            schema_version: SCHEMA_VERSION.into(),
            error: ErrorDto {
                kind: kind.into(),
                message,
                offset,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}
