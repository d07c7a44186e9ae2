//! Randomized verification suites and their reports.
//!
//! Each check draws its inputs from a sampler seeded by `(seed, check name,
//! trial index)`, so a report depends only on `(suite, seed, trials)`.
//! Trials run in parallel and are collected in trial order. The first
//! failing trial of a property is shrunk by greedy term deletion and
//! attached as a witness.

mod checks;
mod minimize;

pub use checks::morphism_battery;
pub use minimize::minimize;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cog2::{CoG2Sampler, Coclosed};
use crate::document::{Document, FormDocument};
use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, VectorField};
use crate::morphism::{MorphismContext, PolyDiffeo};
use crate::random::Sampler;

pub const SUITES: [&str; 9] = [
    "algebra",
    "structure",
    "stabilizer",
    "inclusion",
    "bracket",
    "jacobi",
    "kernel",
    "morphism",
    "all",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    pub message: String,
    pub inputs: Vec<FormDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Number of instances examined.
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn fixed(name: &str, instances: usize, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            instances,
            detail: Some(detail.into()),
            witness: None,
        }
    }

    fn from_error(name: &str, e: Error) -> Self {
        CheckResult {
            name: name.to_string(),
            status: Status::Fail,
            instances: 0,
            detail: None,
            witness: Some(Witness {
                trial: None,
                message: e.to_string(),
                inputs: Vec::new(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
    /// Wall time; the only field that varies between identical runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report without wall time, identical across runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            elapsed_ms: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain data")
    }
}

/// Shared read-only state for one run.
pub struct Context {
    pub fields: CoG2Sampler,
    pub morphisms: MorphismContext,
}

impl Context {
    pub fn flat() -> Self {
        Context {
            fields: CoG2Sampler::flat(),
            morphisms: MorphismContext::flat(),
        }
    }

    pub fn structure(&self) -> &Coclosed {
        &self.fields.structure
    }
}

fn stream_of(name: &str) -> u64 {
    // FNV-1a, fixed so streams do not depend on the platform hasher
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// The sampler for trial `trial` of check `name`.
pub fn trial_sampler(seed: u64, name: &str, trial: usize) -> Sampler {
    Sampler::derived(seed, stream_of(name).wrapping_add(trial as u64))
}

pub type Inputs = Vec<Document>;

/// Generates the inputs of every trial, in trial order.
pub fn generate_trials<G>(ctx: &Context, name: &str, seed: u64, trials: usize, generate: G) -> Vec<Result<Inputs>>
where
    G: Fn(&Context, &mut Sampler, usize) -> Result<Inputs> + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| generate(ctx, &mut trial_sampler(seed, name, t), t))
        .collect()
}

/// A property checked on pre-generated inputs; failures are minimized.
pub fn check_property<H>(ctx: &Context, name: &str, inputs: &[Result<Inputs>], holds: H) -> CheckResult
where
    H: Fn(&Context, &[Document]) -> Result<bool> + Sync,
{
    let outcomes: Vec<Result<bool>> = inputs
        .par_iter()
        .map(|i| match i {
            Ok(docs) => holds(ctx, docs),
            Err(e) => Err(Error::Document(format!("input generation failed: {e}"))),
        })
        .collect();
    let failure = outcomes.iter().position(|o| !matches!(o, Ok(true)));
    let witness = failure.map(|t| {
        let original_err = outcomes[t].as_ref().err().map(ToString::to_string);
        let docs = match &inputs[t] {
            Ok(d) => minimize(d.clone(), |cand| {
                matches!((&original_err, holds(ctx, cand)), (None, Ok(false)) | (Some(_), Err(_)))
            }),
            Err(_) => Vec::new(),
        };
        Witness {
            trial: Some(t),
            message: original_err.unwrap_or_else(|| "property does not hold".into()),
            inputs: docs.iter().map(FormDocument::from_document).collect(),
        }
    });
    CheckResult {
        name: name.to_string(),
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        instances: inputs.len(),
        detail: None,
        witness,
    }
}

/// Generates and checks in one step.
pub fn property<G, H>(ctx: &Context, name: &str, seed: u64, trials: usize, generate: G, holds: H) -> CheckResult
where
    G: Fn(&Context, &mut Sampler, usize) -> Result<Inputs> + Sync,
    H: Fn(&Context, &[Document]) -> Result<bool> + Sync,
{
    let inputs = generate_trials(ctx, name, seed, trials, generate);
    check_property(ctx, name, &inputs, holds)
}

pub(crate) fn form(d: &Document) -> Result<&DifferentialForm> {
    match d {
        Document::Form(a) => Ok(a),
        _ => Err(Error::Document("expected a form input".into())),
    }
}

pub(crate) fn field(d: &Document) -> Result<&VectorField> {
    match d {
        Document::Field(x) => Ok(x),
        _ => Err(Error::Document("expected a field input".into())),
    }
}

pub(crate) fn diffeo(d: &Document) -> Result<&PolyDiffeo> {
    match d {
        Document::Diffeo(p) => Ok(p),
        _ => Err(Error::Document("expected a diffeo input".into())),
    }
}

/// Runs a named suite. `trials` is the number of random instances per
/// property; suites that need a minimum (the morphism battery) raise it.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let ctx = Context::flat();
    let groups: Vec<&str> = match name {
        "all" => SUITES[..SUITES.len() - 1].to_vec(),
        n if SUITES.contains(&n) => vec![n],
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut checks = Vec::new();
    for g in groups {
        checks.extend(checks::run_group(&ctx, g, seed, trials));
    }
    Ok(VerificationReport {
        suite: name.to_string(),
        seed,
        trials,
        checks,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}
