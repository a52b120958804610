//! Seeded identity suites.
//!
//! Each suite re-derives one family of identities through independent
//! routes and counts disagreements. Random inputs come from a ChaCha
//! stream keyed by `(seed, check, trial index)`, so a report depends only
//! on the suite, the seed and the trial count, never on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};

mod suites;

/// Inputs and both sides of the first failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub identity: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(identity: &str, inputs: &[(&str, String)], lhs: String, rhs: String) -> Self {
        Self {
            identity: identity.to_string(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub seed: u64,
    /// Wall time; omitted when a report is emitted for byte-stable output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Trace,
    Waring2,
    WaringN,
    Carlitz,
    Functional,
    Composition,
    Ode,
    Genfun,
    Chebyshev,
    KindK,
    Multivar,
    Brewer,
    Permcheck,
    Historical,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Trace,
        Suite::Waring2,
        Suite::WaringN,
        Suite::Carlitz,
        Suite::Functional,
        Suite::Composition,
        Suite::Ode,
        Suite::Genfun,
        Suite::Chebyshev,
        Suite::KindK,
        Suite::Multivar,
        Suite::Brewer,
        Suite::Permcheck,
        Suite::Historical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Trace => "trace",
            Suite::Waring2 => "waring2",
            Suite::WaringN => "waring-n",
            Suite::Carlitz => "carlitz",
            Suite::Functional => "functional",
            Suite::Composition => "composition",
            Suite::Ode => "ode",
            Suite::Genfun => "genfun",
            Suite::Chebyshev => "chebyshev",
            Suite::KindK => "kindk",
            Suite::Multivar => "multivar",
            Suite::Brewer => "brewer",
            Suite::Permcheck => "permcheck",
            Suite::Historical => "historical",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Test-only fault hooks for exercising the failure path.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Add one to the constant coefficient of every closed-form polynomial.
    CorruptClosedForm,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides the number of random samples each randomized check draws.
    pub trials: Option<usize>,
    pub strategy: Strategy,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            trials: None,
            strategy: Strategy::default(),
            fault: None,
        }
    }

    pub fn with_trials(mut self, trials: Option<usize>) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    fn samples(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

/// Running count of checks, failures and the first counterexample.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    checks: u64,
    failures: u64,
    first: Option<Counterexample>,
}

impl Tally {
    pub(crate) fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(counterexample());
            }
        }
    }

    /// Fold in a later tally; earlier counterexamples win.
    pub(crate) fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub(crate) fn trial_rng(seed: u64, tag: &str, index: u64) -> ChaCha8Rng {
    // FNV-1a over the tag keeps streams of different checks apart
    let tag_hash = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    });
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(tag_hash ^ splitmix(index))))
}

/// Run `count` independent trials of one check and merge them in index
/// order.
pub(crate) fn run_trials<F>(cfg: &VerifyConfig, tag: &str, count: usize, f: F) -> Tally
where
    F: Fn(&mut ChaCha8Rng, u64) -> Tally + Sync + Send,
{
    let parts = exec::map_range(cfg.strategy, 0..count as u64, |i| {
        let mut rng = trial_rng(cfg.seed, tag, i);
        f(&mut rng, i)
    });
    let mut total = Tally::default();
    for part in parts {
        total.merge(part);
    }
    total
}

/// Run one suite.
pub fn verify_suite(suite: Suite, cfg: &VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let tally = suites::run(suite, cfg);
    VerificationReport {
        suite: suite.as_str().to_string(),
        trials: tally.checks,
        failures: tally.failures,
        counterexample: tally.first,
        seed: cfg.seed,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}

/// Run `all` or a single named suite.
pub fn verify(selection: &str, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    if selection == "all" {
        return Ok(Suite::ALL.iter().map(|&s| verify_suite(s, cfg)).collect());
    }
    let suite: Suite = selection.parse()?;
    Ok(vec![verify_suite(suite, cfg)])
}
