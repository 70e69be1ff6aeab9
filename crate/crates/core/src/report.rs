//! Suite reports: deterministic pass/fail records with optional residuals,
//! serialized as text or JSON.
//!
//! Reports are byte-identical across runs with the same config and seed;
//! wall-clock timings are all zero unless explicitly enabled, since they are
//! the only nondeterministic field.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub q_order: usize,
    pub series_order: usize,
    pub tol: f64,
    pub trials: usize,
    pub seed: u64,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            q_order: 64,
            series_order: 8,
            tol: 1e-9,
            trials: 100,
            seed: 0,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub residual: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Outcome of one check, produced by the suite closures.
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
    pub residual: Option<f64>,
}

impl Outcome {
    pub fn from_bool(pass: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            pass,
            detail: detail.into(),
            residual: None,
        }
    }

    pub fn with_residual(pass: bool, detail: impl Into<String>, residual: f64) -> Outcome {
        Outcome {
            pass,
            detail: detail.into(),
            residual: Some(residual),
        }
    }
}

pub struct SuiteBuilder {
    suite: String,
    config: Config,
    checks: Vec<CheckResult>,
}

impl SuiteBuilder {
    pub fn new(suite: &str, config: &Config) -> SuiteBuilder {
        SuiteBuilder {
            suite: suite.to_string(),
            config: config.clone(),
            checks: Vec::new(),
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn check(&mut self, name: &str, f: impl FnOnce(&Config) -> Outcome) {
        let start = Instant::now();
        let outcome = f(&self.config);
        let millis = if self.config.timings {
            start.elapsed().as_millis()
        } else {
            0
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: if outcome.pass {
                Status::Pass
            } else {
                Status::Fail
            },
            detail: outcome.detail,
            residual: outcome.residual.map(|r| format!("{:.3e}", r)),
            millis,
        });
    }

    pub fn finish(self) -> SuiteReport {
        let pass = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let fail = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        let skipped = self.checks.len() - pass - fail;
        SuiteReport {
            suite: self.suite,
            config: self.config,
            checks: self.checks,
            summary: Summary {
                pass,
                fail,
                skipped,
            },
        }
    }
}

/// Text rendering: one check per line in aligned columns, then a summary
/// line per suite.
pub fn render_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    let name_w = reports
        .iter()
        .flat_map(|r| r.checks.iter())
        .map(|c| c.name.len())
        .max()
        .unwrap_or(10)
        .max(10);
    for r in reports {
        let _ = writeln!(out, "suite {}", r.suite);
        for c in &r.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let residual = c.residual.as_deref().unwrap_or("-");
            let _ = writeln!(
                out,
                "  {:<width$}  {:<4}  {:>10}  {}",
                c.name,
                status,
                residual,
                c.detail,
                width = name_w
            );
        }
        let _ = writeln!(
            out,
            "  summary: {} pass, {} fail, {} skipped",
            r.summary.pass, r.summary.fail, r.summary.skipped
        );
    }
    out
}

/// JSON rendering: a single object for one suite, an array otherwise.
pub fn render_json(reports: &[SuiteReport]) -> String {
    if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0]).expect("serialization")
    } else {
        serde_json::to_string_pretty(&reports).expect("serialization")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_shapes() {
        let cfg = Config::default();
        let mut b = SuiteBuilder::new("demo", &cfg);
        b.check("always-passes", |_| Outcome::from_bool(true, "ok"));
        b.check("has-residual", |_| {
            Outcome::with_residual(true, "numeric", 1.25e-10)
        });
        let rep = b.finish();
        assert!(rep.passed());
        assert_eq!(rep.summary.pass, 2);
        let js = render_json(std::slice::from_ref(&rep));
        assert!(js.contains("\"suite\": \"demo\""));
        assert!(js.contains("\"residual\": \"1.250e-10\""));
        assert!(js.contains("\"millis\": 0"));
        let txt = render_text(&[rep]);
        assert!(txt.contains("summary: 2 pass, 0 fail, 0 skipped"));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = Config::default();
        let make = || {
            let mut b = SuiteBuilder::new("demo", &cfg);
            b.check("x", |_| Outcome::from_bool(true, "ok"));
            render_json(&[b.finish()])
        };
        assert_eq!(make(), make());
    }
}
