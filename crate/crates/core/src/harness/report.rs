use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldMode;
use crate::kappa::ElementJson;

/// Failures kept per report; the total is always counted.
pub const MAX_RECORDED_FAILURES: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    /// Trial index; `None` for fixed checks that are not seeded.
    pub trial: Option<u64>,
    pub sub_seed: Option<u64>,
    pub message: String,
    pub inputs: Vec<ElementJson>,
}

impl Failure {
    pub fn fixed(message: impl Into<String>) -> Self {
        Self { trial: None, sub_seed: None, message: message.into(), inputs: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub mode: FieldMode,
    pub trials: u64,
    pub passed: bool,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Float suites only; always present for them, pass or fail.
    pub max_residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub notes: Vec<String>,
    /// Wall-clock time. Not serialized so that reports are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report is serializable")
    }
}

/// Builder used by the suites.
#[derive(Debug)]
pub(crate) struct ReportBuilder {
    suite: String,
    mode: FieldMode,
    trials: u64,
    failure_count: u64,
    failures: Vec<Failure>,
    max_residual: Option<f64>,
    tolerance: Option<f64>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(suite: &str, mode: FieldMode) -> Self {
        Self {
            suite: suite.to_string(),
            mode,
            trials: 0,
            failure_count: 0,
            failures: Vec::new(),
            max_residual: match mode {
                FieldMode::Float => Some(0.0),
                FieldMode::Rational => None,
            },
            tolerance: None,
            notes: Vec::new(),
        }
    }

    pub fn tolerance(&mut self, tol: f64) -> &mut Self {
        if self.mode == FieldMode::Float {
            self.tolerance = Some(tol);
        }
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn fail(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }

    /// A fixed (unseeded) check.
    pub fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.fail(Failure::fixed(message()));
        }
    }

    pub fn residual(&mut self, r: f64) {
        if let Some(m) = self.max_residual.as_mut() {
            // NaN must surface as a failure rather than vanish in max().
            *m = if r.is_nan() || m.is_nan() { f64::NAN } else { m.max(r) };
        }
    }

    pub fn merge(&mut self, outcome: TrialOutcome) {
        self.trials += 1;
        if let Some(r) = outcome.residual {
            self.residual(r);
        }
        if let Some(f) = outcome.failure {
            self.fail(f);
        }
    }

    pub fn finish(self, elapsed: Duration) -> SuiteReport {
        SuiteReport {
            passed: self.failure_count == 0 && !self.max_residual.is_some_and(f64::is_nan),
            suite: self.suite,
            mode: self.mode,
            trials: self.trials,
            failure_count: self.failure_count,
            failures: self.failures,
            max_residual: self.max_residual,
            tolerance: self.tolerance,
            notes: self.notes,
            elapsed,
        }
    }
}

#[derive(Debug, Default)]
pub(crate) struct TrialOutcome {
    pub residual: Option<f64>,
    pub failure: Option<Failure>,
}

impl TrialOutcome {
    pub fn pass() -> Self {
        Self::default()
    }

    pub fn with_residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }
}

/// Runs `trials` independent trials in parallel and merges them in trial order.
pub(crate) fn run_trials<T>(builder: &mut ReportBuilder, seed: u64, trials: u64, trial: T)
where
    T: Fn(u64, u64) -> TrialOutcome + Sync,
{
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|t| trial(t, super::random::sub_seed(seed, t)))
        .collect();
    for o in outcomes {
        builder.merge(o);
    }
}
