//! Named verification suites.
//!
//! Every suite is deterministic in `(seed, trials, field mode)`. Trial `t`
//! draws from `ChaCha8Rng::seed_from_u64(splitmix64(seed ^ t))`, so a
//! reported counterexample replays from its trial index alone. Rational
//! suites compare exactly; float suites always report their max residual.

mod random;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

pub use random::{
    constrained_rational_element, random_float_element, random_rational, random_rational_element, splitmix64,
    sub_seed, trial_orientation, trial_rng, RandomElement,
};
pub use report::{Failure, SuiteReport, MAX_RECORDED_FAILURES};
pub use suites::*;

use crate::field::FieldMode;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Table,
    Tower,
    Epsilon,
    ZeroDivisor,
    ProductOracle,
    Associativity,
    QformIdentity,
    Composition,
    NormRelation,
    NormEquivalence,
    OrthogonalityClosure,
    DualQuaternion,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Table,
        SuiteId::Tower,
        SuiteId::Epsilon,
        SuiteId::ZeroDivisor,
        SuiteId::ProductOracle,
        SuiteId::Associativity,
        SuiteId::QformIdentity,
        SuiteId::Composition,
        SuiteId::NormRelation,
        SuiteId::NormEquivalence,
        SuiteId::OrthogonalityClosure,
        SuiteId::DualQuaternion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Table => "table",
            SuiteId::Tower => "tower",
            SuiteId::Epsilon => "epsilon",
            SuiteId::ZeroDivisor => "zero-divisor",
            SuiteId::ProductOracle => "product-oracle",
            SuiteId::Associativity => "associativity",
            SuiteId::QformIdentity => "qform-identity",
            SuiteId::Composition => "composition",
            SuiteId::NormRelation => "norm-relation",
            SuiteId::NormEquivalence => "norm-equivalence",
            SuiteId::OrthogonalityClosure => "orthogonality-closure",
            SuiteId::DualQuaternion => "dual-quaternion",
        }
    }

    /// Suites that only make sense exactly.
    pub fn exact_only(self) -> bool {
        matches!(self, SuiteId::Table | SuiteId::Tower | SuiteId::Epsilon)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = SuiteId::ALL.iter().map(|id| id.name()).collect();
                format!("unknown suite `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: u64,
    pub modes: Vec<FieldMode>,
    /// Float tolerance; rational suites ignore it.
    pub tolerance: f64,
    pub suites: Vec<SuiteId>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 10_000,
            modes: vec![FieldMode::Rational, FieldMode::Float],
            tolerance: 1e-10,
            suites: SuiteId::ALL.to_vec(),
        }
    }
}

pub fn run_suite(id: SuiteId, mode: FieldMode, config: &VerifyConfig) -> SuiteReport {
    let (seed, n, tol) = (config.seed, config.trials, config.tolerance);
    macro_rules! both {
        ($f:ident) => {
            match mode {
                FieldMode::Rational => $f::<Rational>(seed, n, tol),
                FieldMode::Float => $f::<f64>(seed, n, tol),
            }
        };
    }
    match id {
        SuiteId::Table => suite_table(),
        SuiteId::Tower => suite_tower(),
        SuiteId::Epsilon => suite_epsilon(),
        SuiteId::ZeroDivisor => suite_zero_divisor(mode, tol),
        SuiteId::ProductOracle => both!(suite_product_oracle),
        SuiteId::Associativity => match mode {
            FieldMode::Rational => suite_associativity::<Rational>(seed, n),
            FieldMode::Float => suite_associativity::<f64>(seed, n),
        },
        SuiteId::QformIdentity => both!(suite_qform_identity),
        SuiteId::Composition => both!(suite_composition),
        SuiteId::NormRelation => both!(suite_norm_relation),
        SuiteId::NormEquivalence => both!(suite_norm_equivalence),
        SuiteId::OrthogonalityClosure => both!(suite_orthogonality_closure),
        SuiteId::DualQuaternion => both!(suite_dual_quaternion),
    }
}

/// Runs the selected suites, rational first then float. Exact-only suites
/// run once regardless of the requested modes.
pub fn run_all(config: &VerifyConfig) -> Vec<SuiteReport> {
    let mut reports = Vec::new();
    for &id in &config.suites {
        if id.exact_only() {
            reports.push(run_suite(id, FieldMode::Rational, config));
            continue;
        }
        for mode in [FieldMode::Rational, FieldMode::Float] {
            if config.modes.contains(&mode) {
                reports.push(run_suite(id, mode, config));
            }
        }
    }
    reports
}

pub fn all_passed(reports: &[SuiteReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
