//! Sparse-neighborhood graph coloring: ordered graphs, the capped random
//! weight process, peeling colorers, the online Builder/Painter game and
//! explicit lower-bound constructions, with exact rational oracles to check
//! them against.

pub mod constructions;
pub mod graph;
pub mod online;
pub mod oracles;
pub mod peel;
pub mod sampler;

/// Exact scalar used by the oracles and constructions.
pub type Rational = num_rational::BigRational;
/// Floating scalar used by the sampler and colorers.
pub type Real = f64;

pub use graph::{Graph, OrderedGraph, VertexSet};
