//! Graph file formats.
//!
//! Edge list (text, line oriented):
//!
//! ```text
//! # comment; everything after '#' is ignored
//! vertex a        # declares a vertex (needed for isolated vertices)
//! a b             # an edge between labels a and b
//! ```
//!
//! Labels are arbitrary whitespace-free tokens; they are mapped to dense ids
//! in order of first appearance and the mapping is kept in [`LabeledGraph`].
//! Self-loops and repeated edges are rejected.
//!
//! Ordered graphs are stored as JSON (see [`OrderedGraphFile`]).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError, OrderedGraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
}

/// A graph plus the external label of every vertex id.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels `0..n` for an unlabelled graph.
    pub fn numbered(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|i| i.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Default)]
pub(crate) struct LabelMap {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
}

impl LabelMap {
    pub(crate) fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.ids.insert(label.to_string(), id);
        self.labels.push(label.to_string());
        id
    }

    pub(crate) fn into_labels(self) -> Vec<String> {
        self.labels
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut labels = LabelMap::default();
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["vertex", l] => {
                labels.intern(l);
            }
            [a, b] => {
                if a == b {
                    return Err(FormatError::Parse {
                        line,
                        message: format!("self-loop at {a:?}"),
                    });
                }
                let (u, v) = (labels.intern(a), labels.intern(b));
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(FormatError::Parse {
                        line,
                        message: format!("duplicate edge {a} {b}"),
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(FormatError::Parse {
                    line,
                    message: format!("expected `u v` or `vertex u`, got {:?}", raw.trim()),
                })
            }
        }
    }
    let labels = labels.into_labels();
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// Writes every vertex declaration (in id order) followed by the edges, so
/// that re-parsing reproduces the same ids.
pub fn write_edge_list(lg: &LabeledGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, {} edges", lg.graph.n(), lg.graph.edge_count());
    for l in &lg.labels {
        let _ = writeln!(out, "vertex {l}");
    }
    for (u, v) in lg.graph.edges() {
        let _ = writeln!(out, "{} {}", lg.labels[u], lg.labels[v]);
    }
    out
}

/// JSON carrier for an [`OrderedGraph`] with labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderedGraphFile {
    pub format: String,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex ids in order.
    pub order: Vec<usize>,
    pub d: f64,
    pub f: Option<f64>,
}

pub const ORDERED_GRAPH_FORMAT: &str = "sparsecolor/ordered-graph/v1";

impl OrderedGraphFile {
    pub fn from_ordered(og: &OrderedGraph, labels: &[String]) -> Self {
        OrderedGraphFile {
            format: ORDERED_GRAPH_FORMAT.to_string(),
            labels: labels.to_vec(),
            edges: og.graph().edges().collect(),
            order: og.order().to_vec(),
            d: og.d(),
            f: og.f(),
        }
    }

    pub fn to_ordered(&self) -> Result<(OrderedGraph, Vec<String>), FormatError> {
        if self.format != ORDERED_GRAPH_FORMAT {
            return Err(FormatError::Parse {
                line: 0,
                message: format!("unexpected format tag {:?}", self.format),
            });
        }
        let graph = Graph::from_edges(self.labels.len(), self.edges.iter().copied())?;
        let og = OrderedGraph::new(graph, self.order.clone(), self.d, self.f)?;
        Ok((og, self.labels.clone()))
    }
}

pub fn write_ordered_json(og: &OrderedGraph, labels: &[String]) -> String {
    serde_json::to_string_pretty(&OrderedGraphFile::from_ordered(og, labels)).expect("serializable")
}

pub fn parse_ordered_json(text: &str) -> Result<(OrderedGraph, Vec<String>), FormatError> {
    let file: OrderedGraphFile = serde_json::from_str(text)?;
    file.to_ordered()
}
