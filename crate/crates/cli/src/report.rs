//! Report envelope and error-to-exit-code mapping.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use sparsecolor::constructions::ConstructionError;
use sparsecolor::graph::format::FormatError;
use sparsecolor::oracles::OracleError;
use sparsecolor::peel::PeelError;
use sparsecolor::sampler::SamplerError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_SIZE_LIMIT: u8 = 4;
pub const EXIT_FAILED: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn io(path: &str, e: std::io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{path}: {e}"),
        }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: message.into(),
        }
    }

    pub fn size(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_SIZE_LIMIT,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::parse(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::GraphTooLarge { .. } => Failure::size(e.to_string()),
            other => Failure::failed(other.to_string()),
        }
    }
}

impl From<SamplerError> for Failure {
    fn from(e: SamplerError) -> Self {
        match e {
            SamplerError::TooLargeForEnumeration { .. } => Failure::size(e.to_string()),
            other => Failure::failed(other.to_string()),
        }
    }
}

impl From<PeelError> for Failure {
    fn from(e: PeelError) -> Self {
        Failure::failed(e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::SizeLimit { .. } => Failure::size(e.to_string()),
            ConstructionError::Oracle(o) => o.into(),
            other => Failure::failed(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything but `wall_time_ms` is a function of the resolved config.
#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub verb: String,
    pub config: Value,
    pub seed: Option<u64>,
    pub wall_time_ms: u128,
    pub results: Value,
    pub verifications: Vec<Check>,
}

pub struct ReportBuilder {
    verb: String,
    config: Value,
    seed: Option<u64>,
    started: Instant,
    checks: Vec<Check>,
}

impl ReportBuilder {
    pub fn new(verb: &str, config: Value, seed: Option<u64>) -> Self {
        ReportBuilder {
            verb: verb.into(),
            config,
            seed,
            started: Instant::now(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn finish(self, results: Value) -> Report {
        Report {
            tool: "sparsecolor",
            version: env!("CARGO_PKG_VERSION"),
            verb: self.verb,
            config: self.config,
            seed: self.seed,
            wall_time_ms: self.started.elapsed().as_millis(),
            results,
            verifications: self.checks,
        }
    }
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verifications.iter().all(|c| c.passed)
    }
}
