//! Exact oracles for small graphs: independent sets, chromatic number,
//! fractional chromatic number by exact simplex, and weight certificates.

pub mod certificate;
pub mod chromatic;
pub mod fractional;
pub mod independent;
pub mod lp;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use certificate::{
    parse_ratio, ratio_text, verify_weight_certificate, CertificateFile, Verdict, WeightCertificate,
};
pub use chromatic::{chromatic_number, optimal_coloring};
pub use fractional::{fractional_chromatic, FractionalResult};
pub use independent::{enumerate_all_independent_sets, enumerate_maximal_independent_sets, max_weight_independent_set};
pub use lp::{maximize_packing, ExactField, LpError, LpSolution};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("{oracle}: graph has {n} vertices, limit is {limit}")]
    GraphTooLarge {
        oracle: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("weight of vertex {0} is negative")]
    NegativeWeight(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("certificate weights sum to {0}, not 1")]
    WeightsDoNotSumToOne(String),
    #[error("solution check failed: {0}")]
    InvalidSolution(String),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Vertex-count limits of the exponential oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub maximal_independent_sets: usize,
    pub chromatic: usize,
    pub fractional: usize,
    pub max_weight: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            maximal_independent_sets: 28,
            chromatic: 40,
            fractional: 25,
            max_weight: 64,
        }
    }
}
