//! Verifiers for the structural statements (exact) and the probabilistic
//! ones (seeded Monte Carlo), each producing an [`ExperimentReport`].
//!
//! Trial `i` of a run with master seed `s` draws from the stream
//! `TrialRng::new(s, i)`, so results do not depend on how trials are
//! scheduled across threads.

use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matgroup::{GroupSpec, Mat, SubgroupBase, SubgroupId};
use crate::rng::TrialRng;
use crate::setprod::{ElemSet, Engine};

mod bnp;
pub mod gates;
mod sampling;
mod structure;
pub mod suite;

pub use bnp::{bnp_criterion, exponent_check, BnpCheck, ExponentCheck};
pub use gates::Gates;
pub use sampling::{sylow_product, triple_blocks};
pub use suite::{CriterionResult, SuiteReport};

/// One per-trial row for CSV output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial_index: u64,
    pub seed_stream: u64,
    pub outcome: bool,
    pub metrics: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub spec: String,
    pub seed: u64,
    pub trials: u64,
    pub exact_value: Option<f64>,
    pub empirical_value: Option<f64>,
    pub bound_value: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    /// Exact counts, fractions as `a/b` strings, histograms.
    pub details: Map<String, Value>,
    /// Column names for [`TrialRecord::metrics`].
    #[serde(skip)]
    pub metric_names: Vec<&'static str>,
    #[serde(skip)]
    pub per_trial: Vec<TrialRecord>,
}

impl ExperimentReport {
    fn new(experiment: &str, spec: &GroupSpec, seed: u64, trials: u64) -> ExperimentReport {
        ExperimentReport {
            experiment: experiment.to_string(),
            spec: spec.name(),
            seed,
            trials,
            exact_value: None,
            empirical_value: None,
            bound_value: None,
            pass: false,
            runtime_ms: None,
            details: Map::new(),
            metric_names: Vec::new(),
            per_trial: Vec::new(),
        }
    }

    fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    fn finish(mut self, started: Instant) -> ExperimentReport {
        self.runtime_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    pub fn without_timing(mut self) -> ExperimentReport {
        self.runtime_ms = None;
        self
    }
}

/// Thresholds plus the execution strategy for trial batches.
#[derive(Debug, Clone, Default)]
pub struct Runner {
    pub gates: Gates,
    pub exec: Exec,
}

impl Runner {
    pub fn new(gates: Gates, exec: Exec) -> Runner {
        Runner { gates, exec }
    }

    /// Engine for products inside a single trial. Trials already run in
    /// parallel, so per-trial products stay sequential.
    fn trial_engine(&self) -> Engine {
        Engine::new(self.gates.work_cap, Exec::Sequential)
    }

    fn engine(&self) -> Engine {
        Engine::new(self.gates.work_cap, self.exec)
    }

    fn require_enumerable(&self, spec: &GroupSpec) -> Result<()> {
        let predicted = spec.order();
        if predicted > self.gates.enum_cap {
            return Err(Error::EnumerationCap {
                predicted,
                cap: self.gates.enum_cap,
            });
        }
        Ok(())
    }
}

fn require_simple(spec: &GroupSpec) -> Result<()> {
    if spec.is_centerless() {
        Ok(())
    } else {
        Err(Error::SimpleRequired(spec.name()))
    }
}

fn require_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        Err(Error::Degenerate("at least one trial is required".into()))
    } else {
        Ok(())
    }
}

fn subgroup(spec: &GroupSpec, base: SubgroupBase) -> ElemSet {
    spec.enumerate_subgroup(&SubgroupId::of(base))
}

fn random_elements(spec: &GroupSpec, seed: u64, trial: u64, k: usize) -> Vec<Mat> {
    let mut rng = TrialRng::new(seed, trial).stream();
    (0..k).map(|_| spec.random_element(&mut rng)).collect()
}

fn fraction(num: u64, den: u64) -> String {
    format!("{num}/{den}")
}
