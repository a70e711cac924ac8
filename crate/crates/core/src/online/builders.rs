//! Builder strategies.
//!
//! Recursive strategies are written as ordinary recursive functions over a
//! [`Script`]: `present` returns the color Painter gave, or suspends when
//! that round has not been played yet. The builder re-runs the function from
//! the start every round, so a strategy is a pure function of the colors seen
//! so far and can be replayed against any color sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Builder, BuilderMove, BuilderStep, BuilderView, Color};
use crate::graph::{contains_clique, Graph};

/// Never adds an edge.
pub struct TrivialBuilder;

impl Builder for TrivialBuilder {
    fn next_move(&mut self, _: &BuilderView<'_>) -> BuilderStep {
        BuilderStep::Present(BuilderMove::isolated())
    }

    fn name(&self) -> String {
        "trivial".into()
    }
}

/// Reveals a fixed graph in a fixed order, then stops.
pub struct FixedGraphBuilder {
    graph: Graph,
    order: Vec<usize>,
    position: Vec<usize>,
    label: String,
}

impl FixedGraphBuilder {
    /// `order` defaults to `0..n`.
    pub fn new(graph: Graph, order: Option<Vec<usize>>) -> Self {
        let order = order.unwrap_or_else(|| (0..graph.n()).collect());
        assert_eq!(order.len(), graph.n(), "order must list every vertex once");
        let mut position = vec![usize::MAX; graph.n()];
        for (i, &v) in order.iter().enumerate() {
            assert!(position[v] == usize::MAX, "order must list every vertex once");
            position[v] = i;
        }
        FixedGraphBuilder {
            graph,
            order,
            position,
            label: "fixed".into(),
        }
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = label.into();
        self
    }

    /// Path `0-1-...-(n-1)` revealed in order.
    pub fn path(n: usize) -> Self {
        Self::new(crate::graph::generators::path(n), None).labelled("path")
    }

    /// The path `a-b-c-d` revealed as `a, d, b, c`: first-fit colors the
    /// ends alike, then the middle pair needs colors 1 and 2.
    pub fn path_adversary() -> Self {
        Self::new(crate::graph::generators::path(4), Some(vec![0, 3, 1, 2])).labelled("path-adversary")
    }
}

impl Builder for FixedGraphBuilder {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        let h = view.graph.n();
        let Some(&v) = self.order.get(h) else {
            return BuilderStep::Done;
        };
        let edges = self
            .graph
            .neighbors(v)
            .iter()
            .map(|&u| self.position[u])
            .filter(|&p| p < h)
            .collect();
        BuilderStep::Present(BuilderMove::new(edges))
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

/// Each earlier vertex is proposed independently with probability `p` (in
/// random order) and kept unless it would complete a `K_r`.
pub struct RandomBuilder {
    p: f64,
    r: usize,
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomBuilder {
    pub fn new(p: f64, r: usize, seed: u64) -> Self {
        RandomBuilder {
            p,
            r,
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Builder for RandomBuilder {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        let g = view.graph;
        let mut candidates: Vec<usize> = (0..g.n()).filter(|_| self.rng.gen_bool(self.p)).collect();
        candidates.shuffle(&mut self.rng);
        let mut chosen: Vec<usize> = Vec::new();
        for u in candidates {
            if self.r <= 2 {
                break;
            }
            // u closes a K_r iff its neighbors among `chosen` hold a K_(r-2)
            let common: Vec<usize> = chosen.iter().copied().filter(|&w| g.has_edge(u, w)).collect();
            let closes = if self.r == 3 {
                !common.is_empty()
            } else {
                contains_clique(&g.induced(&common), self.r - 2)
            };
            if !closes {
                chosen.push(u);
            }
        }
        BuilderStep::Present(BuilderMove::new(chosen))
    }

    fn name(&self) -> String {
        format!("random:p={},r={},seed={}", self.p, self.r, self.seed)
    }
}

/// Signals that the strategy wants to play a round that has not happened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suspend(pub BuilderMove);

/// Replay context handed to recursive strategies.
pub struct Script<'a> {
    colors: &'a [Color],
    next: usize,
}

impl<'a> Script<'a> {
    pub fn new(colors: &'a [Color]) -> Self {
        Script { colors, next: 0 }
    }

    /// Presents a vertex adjacent to `edges`; returns its id and color.
    pub fn present(&mut self, edges: &[usize]) -> Result<(usize, Color), Suspend> {
        let v = self.next;
        match self.colors.get(v) {
            Some(&c) => {
                self.next += 1;
                Ok((v, c))
            }
            None => Err(Suspend(BuilderMove::new(edges.to_vec()))),
        }
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    /// Vertices presented so far in this replay.
    pub fn rounds(&self) -> usize {
        self.next
    }
}

type Strategy<R> = Box<dyn Fn(&mut Script<'_>) -> Result<R, Suspend> + Send + Sync>;

/// Turns a replayable strategy function into a [`Builder`]. Once the
/// function returns, its value is kept and the builder reports `Done`.
pub struct BuilderFn<R> {
    label: String,
    strategy: Strategy<R>,
    result: Option<(R, usize)>,
}

impl<R> BuilderFn<R> {
    pub fn new(label: impl Into<String>, strategy: Strategy<R>) -> Self {
        BuilderFn {
            label: label.into(),
            strategy,
            result: None,
        }
    }

    /// The strategy's return value and the number of rounds it used.
    pub fn result(&self) -> Option<&(R, usize)> {
        self.result.as_ref()
    }
}

impl<R> Builder for BuilderFn<R> {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        let mut script = Script::new(view.colors);
        match (self.strategy)(&mut script) {
            Err(Suspend(mv)) => BuilderStep::Present(mv),
            Ok(r) => {
                self.result = Some((r, script.rounds()));
                BuilderStep::Done
            }
        }
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

/// The constant `c_r` of the independent-set lemma: `c_2 = 1`,
/// `c_r = c_(r-1) 2^(-r)`.
pub fn lemma_constant(r: usize) -> f64 {
    assert!(r >= 2);
    (3..=r).fold(1.0, |c, k| c * 2f64.powi(-(k as i32)))
}

/// Builds, against any Painter, an independent set `I` in which every color
/// appears at most `y` times and `|I| >= c_r y^(r-1)`, keeping the graph
/// `K_r`-free. `y` is even at the top level; halved values deeper in the
/// recursion may be fractional and are rounded up where a count is needed.
pub fn force_independent(s: &mut Script<'_>, r: usize, y: f64, join: &[usize]) -> Result<Vec<usize>, Suspend> {
    if r == 2 {
        let mut out = Vec::new();
        for _ in 0..(y.ceil() as usize) {
            out.push(s.present(join)?.0);
        }
        return Ok(out);
    }
    let threshold = lemma_constant(r - 1) * 2f64.powi(-(r as i32) + 1) * y.powi(r as i32 - 2);
    let mut j: Vec<usize> = Vec::new();
    for _ in 0..((y / 2.0).ceil() as usize) {
        let mut counts: std::collections::BTreeMap<Color, usize> = std::collections::BTreeMap::new();
        for &v in &j {
            *counts.entry(s.color(v)).or_default() += 1;
        }
        let gamma: Vec<Color> = counts
            .iter()
            .filter(|(_, &k)| k as f64 >= y / 2.0)
            .map(|(&c, _)| c)
            .collect();
        if gamma.len() as f64 >= threshold {
            return Ok(j.into_iter().filter(|&v| gamma.contains(&s.color(v))).collect());
        }
        let u: Vec<usize> = gamma
            .iter()
            .map(|&c| *j.iter().find(|&&v| s.color(v) == c).expect("color present in J"))
            .collect();
        let mut inner_join = join.to_vec();
        inner_join.extend(&u);
        let v = force_independent(s, r - 1, y / 2.0, &inner_join)?;
        j.retain(|x| !u.contains(x));
        j.extend(v);
    }
    Ok(j)
}

/// [`force_independent`] as a game strategy.
pub struct ForceIndependent {
    pub r: usize,
    pub y: usize,
    inner: BuilderFn<Vec<usize>>,
}

impl ForceIndependent {
    pub fn new(r: usize, y: usize) -> Result<Self, String> {
        if r < 2 || y == 0 || (r > 2 && y % 2 == 1) {
            return Err(format!(
                "force-independent needs r >= 2 and even y >= 2 (r > 2), got r={r}, y={y}"
            ));
        }
        let label = format!("force-independent:r={r},y={y}");
        let strategy: Strategy<Vec<usize>> = Box::new(move |s| force_independent(s, r, y as f64, &[]));
        Ok(ForceIndependent {
            r,
            y,
            inner: BuilderFn::new(label, strategy),
        })
    }

    /// The set `I` and the rounds used, once the strategy has finished.
    pub fn result(&self) -> Option<&(Vec<usize>, usize)> {
        self.inner.result()
    }

    /// The lemma's lower bound `c_r y^(r-1)` on `|I|`.
    pub fn size_bound(&self) -> f64 {
        lemma_constant(self.r) * (self.y as f64).powi(self.r as i32 - 1)
    }

    /// The round bound `y^(r-1)`.
    pub fn round_bound(&self) -> usize {
        self.y.pow(self.r as u32 - 1)
    }
}

impl Builder for ForceIndependent {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        self.inner.next_move(view)
    }

    fn name(&self) -> String {
        self.inner.name()
    }
}

/// Triangle-free recursion returning an independent set carrying `k`
/// distinct colors: two disjoint runs for `k - 1`; if their color sets
/// differ, one run plus a vertex of a new color from the other, otherwise an
/// apex on the first run (forced to a new color) together with the second.
pub fn force_distinct(s: &mut Script<'_>, k: usize) -> Result<Vec<usize>, Suspend> {
    if k <= 1 {
        return Ok(vec![s.present(&[])?.0]);
    }
    let a = force_distinct(s, k - 1)?;
    let b = force_distinct(s, k - 1)?;
    let colors_a: Vec<Color> = a.iter().map(|&v| s.color(v)).collect();
    if let Some(&extra) = b.iter().find(|&&v| !colors_a.contains(&s.color(v))) {
        let mut out = a;
        out.push(extra);
        return Ok(out);
    }
    let (apex, _) = s.present(&a)?;
    let mut out = b;
    out.push(apex);
    Ok(out)
}

/// Forces `k + 1` colors on a triangle-free graph: an independent set with
/// `k` colors, then a vertex adjacent to all of it. Takes at most
/// `2^(k+1) - 1` rounds.
pub struct ForceColors {
    pub k: usize,
    inner: BuilderFn<Vec<usize>>,
}

impl ForceColors {
    pub fn new(k: usize) -> Self {
        let strategy: Strategy<Vec<usize>> = Box::new(move |s| {
            let set = force_distinct(s, k)?;
            s.present(&set)?;
            Ok(set)
        });
        ForceColors {
            k,
            inner: BuilderFn::new(format!("force-colors:k={k}"), strategy),
        }
    }

    pub fn round_bound(&self) -> usize {
        (1usize << (self.k + 1)) - 1
    }
}

impl Builder for ForceColors {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        self.inner.next_move(view)
    }

    fn name(&self) -> String {
        self.inner.name()
    }
}

/// Drops every edge to a vertex whose color an earlier kept neighbor
/// already has. The set of colors forbidden to Painter is unchanged.
pub struct Normalized<B>(pub B);

pub fn normalize_move(mv: &BuilderMove, colors: &[Color]) -> BuilderMove {
    let mut seen = std::collections::HashSet::new();
    BuilderMove::new(
        mv.edges_to_previous
            .iter()
            .copied()
            .filter(|&u| seen.insert(colors[u]))
            .collect(),
    )
}

impl<B: Builder> Builder for Normalized<B> {
    fn next_move(&mut self, view: &BuilderView<'_>) -> BuilderStep {
        match self.0.next_move(view) {
            BuilderStep::Present(mv) => BuilderStep::Present(normalize_move(&mv, view.colors)),
            BuilderStep::Done => BuilderStep::Done,
        }
    }

    fn name(&self) -> String {
        format!("normalized({})", self.0.name())
    }
}
