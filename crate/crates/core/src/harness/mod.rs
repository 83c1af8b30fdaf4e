//! Seeded verification runs, reports and regression fixtures.
//!
//! A run executes named checks. Each check draws its samples from the run
//! seed and records every failing sample with its seed and residual. Checks
//! run on scoped threads; the report is sorted by check name, so its text
//! does not depend on scheduling.

mod corpus;
mod fixture;
mod suites;

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

pub use corpus::{reduction_corpus, CORPUS_SIZE};
pub use fixture::{check_fixture, compare_fixture, fixture_lines, parse_fixture, record_fixture, render_fixture, FixtureEntry, FLOAT_REL_TOL};
pub use suites::{exact_checks, float_checks, poisson_checks, random_polynomial, Check};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("fixture mismatch:\n{diff}")]
    FixtureMismatch { diff: String },
    #[error("fixture i/o: {0}")]
    Io(String),
    #[error("malformed fixture line {line}: {msg}")]
    MalformedFixture { line: usize, msg: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

impl FromStr for OutputFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "structured" => Ok(OutputFormat::Structured),
            _ => Err(HarnessError::InvalidConfig(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    /// Only consulted by float checks.
    pub tolerance: f64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: DEFAULT_SEED, samples: 100, tolerance: 1e-9, format: OutputFormat::Text }
    }
}

impl RunConfig {
    pub fn new(seed: u64, samples: usize, tolerance: f64, format: OutputFormat) -> Result<Self, HarnessError> {
        if samples == 0 {
            return Err(HarnessError::InvalidConfig("samples must be at least 1".into()));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(HarnessError::InvalidConfig(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(RunConfig { seed, samples, tolerance, format })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    /// Text output includes timings; structured output does not, so it is
    /// byte-identical for a given seed.
    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            match format {
                OutputFormat::Text => {
                    let _ = writeln!(
                        out,
                        "{status}  {:<34} samples={:<5} failures={:<3} {:.2?}",
                        c.name,
                        c.samples,
                        c.failures.len(),
                        c.elapsed
                    );
                    for f in c.failures.iter().take(5) {
                        let _ = writeln!(out, "      seed {}: {}", f.seed, f.detail);
                    }
                }
                OutputFormat::Structured => {
                    let _ = writeln!(
                        out,
                        "check={}\tstatus={status}\tsamples={}\tfailures={}",
                        c.name,
                        c.samples,
                        c.failures.len()
                    );
                    for f in &c.failures {
                        let _ = writeln!(out, "failure={}\tseed={}\tdetail={}", c.name, f.seed, f.detail);
                    }
                }
            }
        }
        let _ = match format {
            OutputFormat::Text => writeln!(
                out,
                "{} checks, {} failures",
                self.checks.len(),
                self.failure_count()
            ),
            OutputFormat::Structured => writeln!(out, "summary\tchecks={}\tfailures={}", self.checks.len(), self.failure_count()),
        };
        out
    }
}

/// Run checks on scoped threads and collect a name-sorted report.
pub fn run_checks(checks: &[Check], config: &RunConfig) -> VerificationReport {
    let mut results: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|check| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let mut r = (check.run)(config);
                    r.name = check.name.to_string();
                    r.elapsed = start.elapsed();
                    r
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(checks)
            .map(|(h, check)| {
                h.join().unwrap_or_else(|_| CheckResult {
                    name: check.name.to_string(),
                    samples: 0,
                    failures: vec![Failure { seed: config.seed, detail: "check panicked".into() }],
                    elapsed: Duration::ZERO,
                })
            })
            .collect()
    });
    results.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport { checks: results }
}

/// The zero-tolerance suite.
pub fn verify_exact(config: &RunConfig) -> VerificationReport {
    run_checks(&exact_checks(), config)
}

/// Float checks (tolerance applies).
pub fn verify_float(config: &RunConfig) -> VerificationReport {
    run_checks(&float_checks(), config)
}

/// Everything: exact, float and Poisson suites.
pub fn cmd_verify(config: &RunConfig) -> VerificationReport {
    let mut all = exact_checks();
    all.extend(float_checks());
    all.extend(poisson_checks());
    run_checks(&all, config)
}

pub fn poisson_selftest(config: &RunConfig) -> VerificationReport {
    run_checks(&poisson_checks(), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(1, 0, 1e-9, OutputFormat::Text).is_err());
        assert!(RunConfig::new(1, 1, 0.0, OutputFormat::Text).is_err());
        assert!(RunConfig::new(1, 1, f64::NAN, OutputFormat::Text).is_err());
        assert_eq!("structured".parse::<OutputFormat>().unwrap(), OutputFormat::Structured);
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn single_sample_runs_every_check_deterministically() {
        let cfg = RunConfig::new(3, 1, 1e-9, OutputFormat::Structured).unwrap();
        let a = verify_exact(&cfg);
        assert!(a.passed(), "{}", a.render(OutputFormat::Text));
        assert!(a.checks.iter().all(|c| c.samples >= 1));
        let names: Vec<&str> = a.checks.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(a.render(OutputFormat::Structured), verify_exact(&cfg).render(OutputFormat::Structured));
    }

    #[test]
    fn failures_render_with_seed() {
        let report = VerificationReport {
            checks: vec![CheckResult {
                name: "demo".into(),
                samples: 2,
                failures: vec![Failure { seed: 9, detail: "residual 1".into() }],
                elapsed: Duration::ZERO,
            }],
        };
        assert!(!report.passed());
        let text = report.render(OutputFormat::Structured);
        assert!(text.contains("check=demo\tstatus=FAIL\tsamples=2\tfailures=1"));
        assert!(text.contains("failure=demo\tseed=9\tdetail=residual 1"));
        assert!(text.ends_with("summary\tchecks=1\tfailures=1\n"));
    }
}
