//! The on-line coloring game between Builder and Painter.
//!
//! In round `h` Builder presents vertex `h` together with its edges to
//! earlier vertices; the referee rejects the move if it creates a `K_r`.
//! Painter then colors the vertex from the palette `0..palette`, differently
//! from all its neighbors. Builder wins if some vertex cannot be colored.

pub mod builders;
pub mod painters;
pub mod spec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{contains_clique, Graph};

pub use builders::{
    BuilderFn, FixedGraphBuilder, ForceColors, ForceIndependent, Normalized, RandomBuilder, Script, Suspend,
    TrivialBuilder,
};
pub use painters::{
    FirstFit, RandomLegal, RecursivePainter, ScriptedPainter, SplitClasses, WitnessPainter, WitnessState,
};

pub type Color = usize;

/// Edges from the new vertex to earlier vertices, as sorted indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuilderMove {
    pub edges_to_previous: Vec<usize>,
}

impl BuilderMove {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        BuilderMove {
            edges_to_previous: edges,
        }
    }

    pub fn isolated() -> Self {
        BuilderMove::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuilderStep {
    Present(BuilderMove),
    /// Builder has nothing more to present.
    Done,
}

/// What Builder sees before round `graph.n()`: the graph so far and every
/// color assigned.
pub struct BuilderView<'a> {
    pub graph: &'a Graph,
    pub colors: &'a [Color],
}

/// What Painter sees in round `graph.n() - 1`: the graph including the new
/// vertex and its own earlier colors.
pub struct PainterView<'a> {
    pub graph: &'a Graph,
    pub colors: &'a [Color],
    pub palette: usize,
}

impl PainterView<'_> {
    pub fn vertex(&self) -> usize {
        self.graph.n() - 1
    }

    pub fn neighbors(&self) -> &[usize] {
        self.graph.neighbors(self.vertex())
    }

    /// Colors on the new vertex's neighbors, deduplicated and sorted.
    pub fn neighbor_colors(&self) -> Vec<Color> {
        let mut cs: Vec<Color> = self.neighbors().iter().map(|&u| self.colors[u]).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// Smallest color not used on a neighbor.
    pub fn first_free(&self) -> Color {
        let used = self.neighbor_colors();
        used.iter()
            .enumerate()
            .find(|(i, &c)| *i != c)
            .map_or(used.len(), |(i, _)| i)
    }
}

pub trait Builder {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep;
    fn name(&self) -> String;
}

pub trait Painter {
    /// A color for the newest vertex, or `None` if the strategy is stuck.
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color>;
    fn name(&self) -> String;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    PainterWon,
    /// No in-palette color was legal for vertex `round`.
    BuilderWon {
        round: usize,
    },
    /// Painter answered with a color outside the palette at `round`.
    PaletteExceeded {
        round: usize,
        color: Color,
    },
    RefereeRejected {
        round: usize,
    },
    /// Painter gave up at `round` (e.g. the witness painter found no free class).
    PainterStuck {
        round: usize,
    },
}

impl Outcome {
    pub fn builder_won(&self) -> bool {
        matches!(self, Outcome::BuilderWon { .. } | Outcome::PaletteExceeded { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    /// Maximum number of rounds.
    pub n: usize,
    /// The graph must stay `K_r`-free.
    pub r: usize,
    pub palette: usize,
    pub seed: u64,
}

pub const TRANSCRIPT_FORMAT: &str = "sparsecolor/transcript/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTranscript {
    pub format: String,
    pub config: GameConfig,
    pub builder: String,
    pub painter: String,
    pub moves: Vec<BuilderMove>,
    pub colors: Vec<Color>,
    pub outcome: Outcome,
    /// Edges of the final graph (rejected moves excluded).
    pub final_edges: Vec<(usize, usize)>,
}

impl GameTranscript {
    pub fn colors_used(&self) -> usize {
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn rounds(&self) -> usize {
        self.moves.len()
    }

    pub fn final_graph(&self) -> Graph {
        let n = self.moves.len() - usize::from(matches!(self.outcome, Outcome::RefereeRejected { .. }));
        Graph::from_edges(n, self.final_edges.iter().copied()).expect("transcript edges are simple")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("invalid game configuration: {0}")]
    Config(String),
    #[error("round {round}: builder referenced vertex {index}, only {available} exist")]
    BadIndex {
        round: usize,
        index: usize,
        available: usize,
    },
    #[error("round {round}: painter chose color {color}, already on neighbor {neighbor}")]
    IllegalColor {
        round: usize,
        color: Color,
        neighbor: usize,
    },
}

/// Creates `K_r` iff the new vertex's neighborhood contains `K_(r-1)`.
fn creates_clique(g: &Graph, neighbors: &[usize], r: usize) -> bool {
    if r <= 1 {
        return true;
    }
    if r == 2 {
        return !neighbors.is_empty();
    }
    contains_clique(&g.induced(neighbors), r - 1)
}

pub fn play(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    cfg: &GameConfig,
) -> Result<GameTranscript, GameError> {
    if cfg.n == 0 || cfg.r < 2 || cfg.palette == 0 {
        return Err(GameError::Config(format!(
            "need n >= 1, r >= 2, palette >= 1; got {cfg:?}"
        )));
    }
    let mut graph = Graph::empty(0);
    let mut colors: Vec<Color> = Vec::new();
    let mut moves = Vec::new();
    let mut outcome = Outcome::PainterWon;
    for round in 0..cfg.n {
        let step = builder.next_move(&BuilderView {
            graph: &graph,
            colors: &colors,
        });
        let BuilderStep::Present(mv) = step else { break };
        if let Some(&index) = mv.edges_to_previous.iter().find(|&&u| u >= round) {
            return Err(GameError::BadIndex {
                round,
                index,
                available: round,
            });
        }
        let mv = BuilderMove::new(mv.edges_to_previous);
        let rejected = creates_clique(&graph, &mv.edges_to_previous, cfg.r);
        moves.push(mv.clone());
        if rejected {
            outcome = Outcome::RefereeRejected { round };
            break;
        }
        graph.push_vertex(&mv.edges_to_previous);
        let view = PainterView {
            graph: &graph,
            colors: &colors,
            palette: cfg.palette,
        };
        let blocked = view.neighbor_colors();
        if blocked.iter().filter(|&&c| c < cfg.palette).count() >= cfg.palette {
            outcome = Outcome::BuilderWon { round };
            break;
        }
        let Some(color) = painter.color(&view) else {
            outcome = Outcome::PainterStuck { round };
            break;
        };
        if let Some(&neighbor) = mv.edges_to_previous.iter().find(|&&u| colors[u] == color) {
            return Err(GameError::IllegalColor { round, color, neighbor });
        }
        if color >= cfg.palette {
            outcome = Outcome::PaletteExceeded { round, color };
            break;
        }
        colors.push(color);
    }
    Ok(GameTranscript {
        format: TRANSCRIPT_FORMAT.to_string(),
        config: cfg.clone(),
        builder: builder.name(),
        painter: painter.name(),
        moves,
        colors,
        outcome,
        final_edges: graph.edges().collect(),
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("transcript check failed at round {round}: {message}")]
pub struct ReplayError {
    pub round: usize,
    pub message: String,
}

/// Re-derives everything in a transcript from its moves and colors alone:
/// indices, `K_r`-freeness of every prefix, legality of every color, the
/// outcome, and the final edge list.
pub fn verify_transcript(t: &GameTranscript) -> Result<(), ReplayError> {
    let fail = |round: usize, message: String| Err(ReplayError { round, message });
    let cfg = &t.config;
    if t.format != TRANSCRIPT_FORMAT {
        return fail(0, format!("unknown format {:?}", t.format));
    }
    if t.moves.len() > cfg.n {
        return fail(cfg.n, "more moves than rounds".into());
    }
    let uncolored = t.moves.len().checked_sub(t.colors.len());
    let expect_uncolored = usize::from(!matches!(t.outcome, Outcome::PainterWon));
    if uncolored != Some(expect_uncolored) {
        return fail(t.colors.len(), "number of colors does not match the outcome".into());
    }
    let mut graph = Graph::empty(0);
    for (round, mv) in t.moves.iter().enumerate() {
        let e = &mv.edges_to_previous;
        if e.windows(2).any(|w| w[0] >= w[1]) || e.iter().any(|&u| u >= round) {
            return fail(round, format!("malformed move {e:?}"));
        }
        let rejected = creates_clique(&graph, e, cfg.r);
        let last = round + 1 == t.moves.len();
        match (&t.outcome, rejected) {
            (Outcome::RefereeRejected { round: k }, true) if *k == round && last => break,
            (_, true) => return fail(round, format!("move creates K_{} but was accepted", cfg.r)),
            (Outcome::RefereeRejected { round: k }, false) if *k == round => {
                return fail(round, "rejected move does not create a clique".into())
            }
            _ => {}
        }
        graph.push_vertex(e);
        if let Some(&c) = t.colors.get(round) {
            if c >= cfg.palette {
                return fail(round, format!("color {c} outside palette"));
            }
            if let Some(&u) = e.iter().find(|&&u| t.colors[u] == c) {
                return fail(round, format!("color {c} repeats neighbor {u}"));
            }
            continue;
        }
        let blocked: std::collections::BTreeSet<Color> =
            e.iter().map(|&u| t.colors[u]).filter(|&c| c < cfg.palette).collect();
        match &t.outcome {
            Outcome::BuilderWon { round: k } if *k == round => {
                if blocked.len() < cfg.palette {
                    return fail(round, "builder declared winner but a legal color exists".into());
                }
            }
            Outcome::PaletteExceeded { round: k, color } if *k == round => {
                if *color < cfg.palette {
                    return fail(round, "palette-exceeded color is inside the palette".into());
                }
            }
            Outcome::PainterStuck { round: k } if *k == round => {}
            other => return fail(round, format!("uncolored vertex inconsistent with outcome {other:?}")),
        }
    }
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    if edges != t.final_edges {
        return fail(t.moves.len(), "final edge list differs from replay".into());
    }
    Ok(())
}
