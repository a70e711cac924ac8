//! Weight certificates for lower bounds on the fractional chromatic number.
//!
//! A probability distribution `w` on the vertices such that every independent
//! set has weight at most `bound` proves `chi_f(G) >= 1 / bound`.
//!
//! Text format, one record per line (`#` starts a comment):
//!
//! ```text
//! vertex <label> <num>/<den>
//! edge <label> <label>
//! bound <num>/<den>
//! ```
//!
//! Rationals are always written in lowest terms as `num/den`, so a parsed and
//! re-written file is byte-identical.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::fractional::FractionalResult;
use super::independent::max_weight_independent_set;
use super::OracleError;
use crate::graph::format::{FormatError, LabelMap, LabeledGraph};
use crate::graph::{Graph, VertexSet};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightCertificate {
    /// `w_v`, indexed by vertex id.
    pub weights: Vec<Rational>,
    pub bound: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// Every independent set weighs at most the bound; `heaviest` attains the
    /// maximum weight `weight`.
    Certified { heaviest: VertexSet, weight: Rational },
    /// `set` is independent and weighs more than the bound.
    Violated { set: VertexSet, weight: Rational },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Certified { .. })
    }
}

impl WeightCertificate {
    /// The normalized dual `w / chi_f` of an LP solution, with bound `1/chi_f`.
    pub fn from_fractional(r: &FractionalResult<Rational>) -> Option<Self> {
        if r.value.is_zero() {
            return None;
        }
        Some(WeightCertificate {
            weights: r.dual.iter().map(|w| w / &r.value).collect(),
            bound: r.value.recip(),
        })
    }

    /// The lower bound `1/bound` this certificate proves when it verifies.
    pub fn implied_lower_bound(&self) -> Option<Rational> {
        (self.bound.is_positive()).then(|| self.bound.recip())
    }
}

pub fn verify_weight_certificate(g: &Graph, cert: &WeightCertificate, limit: usize) -> Result<Verdict, OracleError> {
    if cert.weights.len() != g.n() {
        return Err(OracleError::WeightCountMismatch {
            expected: g.n(),
            got: cert.weights.len(),
        });
    }
    let total: Rational = cert.weights.iter().sum();
    if !total.is_one() {
        return Err(OracleError::WeightsDoNotSumToOne(ratio_text(&total)));
    }
    let (set, weight) = max_weight_independent_set(g, &cert.weights, limit)?;
    Ok(if weight <= cert.bound {
        Verdict::Certified { heaviest: set, weight }
    } else {
        Verdict::Violated { set, weight }
    })
}

pub fn ratio_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_ratio(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.parse().ok()?, b.parse().ok()?),
        None => (s.parse().ok()?, 1.into()),
    };
    let den: num_bigint::BigInt = den;
    (!den.is_zero()).then(|| Rational::new(num, den))
}

/// A certificate together with the labelled graph it speaks about.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateFile {
    pub graph: LabeledGraph,
    pub certificate: WeightCertificate,
}

impl CertificateFile {
    pub fn verify(&self, limit: usize) -> Result<Verdict, OracleError> {
        verify_weight_certificate(&self.graph.graph, &self.certificate, limit)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let lg = &self.graph;
        for (label, w) in lg.labels.iter().zip(&self.certificate.weights) {
            let _ = writeln!(out, "vertex {label} {}", ratio_text(w));
        }
        for (u, v) in lg.graph.edges() {
            let _ = writeln!(out, "edge {} {}", lg.labels[u], lg.labels[v]);
        }
        let _ = writeln!(out, "bound {}", ratio_text(&self.certificate.bound));
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut labels = LabelMap::default();
        let mut weights: Vec<Option<Rational>> = Vec::new();
        let mut edges = Vec::new();
        let mut bound = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let err = |message: String| FormatError::Parse { line, message };
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", label, w] => {
                    let w = parse_ratio(w).ok_or_else(|| err(format!("bad rational {w:?}")))?;
                    let id = labels.intern(label);
                    if id == weights.len() {
                        weights.push(None);
                    }
                    if weights[id].replace(w).is_some() {
                        return Err(err(format!("vertex {label} declared twice")));
                    }
                }
                ["edge", a, b] => {
                    let ids = (labels.intern(a), labels.intern(b));
                    while weights.len() < ids.0.max(ids.1) + 1 {
                        weights.push(None);
                    }
                    edges.push(ids);
                }
                ["bound", b] => {
                    if bound.is_some() {
                        return Err(err("bound given twice".into()));
                    }
                    bound = Some(parse_ratio(b).ok_or_else(|| err(format!("bad rational {b:?}")))?);
                }
                _ => return Err(err(format!("unrecognized record {:?}", raw.trim()))),
            }
        }
        let labels = labels.into_labels();
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(id, w)| w.ok_or_else(|| FormatError::UnknownLabel(labels[id].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let bound = bound.ok_or(FormatError::Parse {
            line: 0,
            message: "missing bound record".into(),
        })?;
        let graph = Graph::from_edges(labels.len(), edges)?;
        Ok(CertificateFile {
            graph: LabeledGraph { graph, labels },
            certificate: WeightCertificate { weights, bound },
        })
    }
}
