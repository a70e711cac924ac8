//! Painter strategies.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Color, Painter, PainterView};
use crate::graph::{common_neighbor, Graph, VertexSet};

/// Smallest color not on a neighbor.
pub struct FirstFit;

impl Painter for FirstFit {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        Some(view.first_free())
    }

    fn name(&self) -> String {
        "first-fit".into()
    }
}

/// Uniform over the legal colors already in use plus one fresh color (when
/// the palette has room).
pub struct RandomLegal {
    seed: u64,
    rng: ChaCha8Rng,
    used: usize,
}

impl RandomLegal {
    pub fn new(seed: u64) -> Self {
        RandomLegal {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            used: 0,
        }
    }
}

impl Painter for RandomLegal {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        let blocked = view.neighbor_colors();
        let mut options: Vec<Color> = (0..self.used).filter(|c| blocked.binary_search(c).is_err()).collect();
        if self.used < view.palette {
            options.push(self.used);
        }
        let c = if options.is_empty() {
            view.first_free()
        } else {
            options[self.rng.gen_range(0..options.len())]
        };
        self.used = self.used.max(c + 1);
        Some(c)
    }

    fn name(&self) -> String {
        format!("random-legal:seed={}", self.seed)
    }
}

/// Plays a fixed color sequence; stuck once it runs out.
pub struct ScriptedPainter {
    colors: Vec<Color>,
}

impl ScriptedPainter {
    pub fn new(colors: Vec<Color>) -> Self {
        ScriptedPainter { colors }
    }
}

impl Painter for ScriptedPainter {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        self.colors.get(view.vertex()).copied()
    }

    fn name(&self) -> String {
        "scripted".into()
    }
}

/// `⌊4n ln ln n / ln n⌋`, at least 1.
pub fn default_t(n: usize) -> usize {
    let x = n as f64;
    let t = 4.0 * x * x.ln().ln() / x.ln();
    if t.is_finite() && t >= 1.0 {
        t.floor() as usize
    } else {
        1
    }
}

/// `⌊ln n / (8 ln ln n)⌋`, at least 1.
pub fn default_s(n: usize) -> usize {
    let x = n as f64;
    let s = x.ln() / (8.0 * x.ln().ln());
    if s.is_finite() && s >= 1.0 {
        s.floor() as usize
    } else {
        1
    }
}

/// Which rule colored a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// A color of `L` missing from the neighborhood.
    Free,
    /// Joined an existing class `C_j`, shrinking `N_j`.
    Join,
    /// Opened an empty class `C_j` with a fresh witness set.
    Open,
}

/// Bookkeeping of the two-palette strategy. Colors `0..t` form `L`;
/// class `j` of `[t]` is color `t + j`.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessState {
    pub t: usize,
    pub n: usize,
    pub colors: Vec<Color>,
    pub classes: Vec<Vec<usize>>,
    pub witnesses: Vec<Vec<usize>>,
    /// The `j` whose witness set holds each vertex.
    owner: Vec<Option<usize>>,
    pub branches: [u64; 3],
}

impl WitnessState {
    pub fn new(t: usize, n: usize) -> Self {
        assert!(t >= 1 && n >= 1);
        WitnessState {
            t,
            n,
            colors: Vec::new(),
            classes: vec![Vec::new(); t],
            witnesses: vec![Vec::new(); t],
            owner: Vec::new(),
            branches: [0; 3],
        }
    }

    fn in_l(&self, v: usize) -> bool {
        self.colors[v] < self.t
    }

    /// Lower bound on `|N_j|` for a class of the given size.
    pub fn witness_bound(&self, class_size: usize) -> f64 {
        let ratio = self.t as f64 / (2.0 * self.n as f64);
        ratio.powi(class_size as i32 - 1) * self.t as f64 / 2.0
    }

    /// One step on vertex `v` with the given (earlier) neighbors. Returns
    /// the color and the rule used, or `None` if no rule applies.
    /// `avoid_neighbors` restricts the `[t]` rules to classes with no
    /// neighbor of `v`, which keeps the coloring proper in graphs with
    /// triangles; classes are then only guaranteed to share a neighbor.
    pub fn step(&mut self, g: &Graph, v: usize, neighbors: &[usize], avoid_neighbors: bool) -> Option<(Color, Branch)> {
        assert_eq!(v, self.colors.len());
        let t = self.t;
        let mut l_seen = vec![false; t];
        let mut class_seen = vec![false; t];
        for &u in neighbors {
            let c = self.colors[u];
            if c < t {
                l_seen[c] = true;
            } else {
                class_seen[c - t] = true;
            }
        }
        self.owner.push(None);
        if let Some(l) = l_seen.iter().position(|&s| !s) {
            self.colors.push(l);
            self.branches[0] += 1;
            return Some((l, Branch::Free));
        }
        let join = (0..t).find(|&j| {
            if self.classes[j].is_empty() || (avoid_neighbors && class_seen[j]) {
                return false;
            }
            let hits = self.witnesses[j].iter().filter(|&&w| g.has_edge(v, w)).count();
            hits * 2 * self.n >= t * self.witnesses[j].len()
        });
        if let Some(j) = join {
            let (keep, drop): (Vec<usize>, Vec<usize>) = self.witnesses[j].iter().partition(|&&w| g.has_edge(v, w));
            for w in drop {
                self.owner[w] = None;
            }
            self.witnesses[j] = keep;
            self.classes[j].push(v);
            self.colors.push(t + j);
            self.branches[1] += 1;
            return Some((t + j, Branch::Join));
        }
        let j = (0..t).find(|&j| self.classes[j].is_empty())?;
        let fresh: Vec<usize> = neighbors
            .iter()
            .copied()
            .filter(|&u| self.in_l(u) && self.owner[u].is_none())
            .collect();
        if (fresh.len() as f64) < self.witness_bound(1) {
            return None;
        }
        for &w in &fresh {
            self.owner[w] = Some(j);
        }
        self.witnesses[j] = fresh;
        self.classes[j].push(v);
        self.colors.push(t + j);
        self.branches[2] += 1;
        Some((t + j, Branch::Open))
    }

    /// Checks the four invariants for class `j`, plus disjointness of `N_j`
    /// from every other witness set.
    pub fn check_class(&self, g: &Graph, j: usize) -> Result<(), String> {
        let (c, w) = (&self.classes[j], &self.witnesses[j]);
        if let Some(&x) = w.iter().find(|&&x| !self.in_l(x)) {
            return Err(format!("N_{j} holds vertex {x} colored outside L"));
        }
        for &x in w {
            if let Some(&y) = c.iter().find(|&&y| !g.has_edge(x, y)) {
                return Err(format!("N_{j} member {x} misses class member {y}"));
            }
            if self.owner[x] != Some(j) {
                return Err(format!("N_{j} member {x} is claimed by {:?}", self.owner[x]));
            }
        }
        if !c.is_empty() && (w.len() as f64) < self.witness_bound(c.len()) * (1.0 - 1e-12) {
            return Err(format!(
                "|N_{j}| = {} below bound {} for |C_{j}| = {}",
                w.len(),
                self.witness_bound(c.len()),
                c.len()
            ));
        }
        Ok(())
    }

    /// All invariants, from scratch.
    pub fn check_all(&self, g: &Graph) -> Result<(), String> {
        let mut seen = vec![false; self.colors.len()];
        for j in 0..self.t {
            for &x in &self.witnesses[j] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(format!("vertex {x} lies in two witness sets"));
                }
            }
            self.check_class(g, j)?;
        }
        Ok(())
    }

    /// Every `L` class is independent and every nonempty `[t]` class has a
    /// common neighbor, with all of `N_j` being common neighbors.
    pub fn check_structure(&self, g: &Graph) -> Result<(), String> {
        for l in 0..self.t {
            let class: VertexSet = (0..self.colors.len()).filter(|&v| self.colors[v] == l).collect();
            if !g.is_independent(&class) {
                return Err(format!("L class {l} is not independent"));
            }
        }
        for j in 0..self.t {
            let class = VertexSet::from(self.classes[j].clone());
            if class.is_empty() {
                continue;
            }
            if self.witnesses[j].is_empty() {
                return Err(format!("class {j} has an empty witness set"));
            }
            match common_neighbor(g, &class) {
                Ok(Some(_)) => {}
                _ => return Err(format!("class {j} has no common neighbor")),
            }
            if let Some(&w) = self.witnesses[j]
                .iter()
                .find(|&&w| self.classes[j].iter().any(|&c| !g.has_edge(w, c)))
            {
                return Err(format!("witness {w} of class {j} is not a common neighbor"));
            }
        }
        Ok(())
    }
}

/// The two-palette strategy using at most `2t` colors on `n`-vertex inputs.
/// With `proper` set it only joins classes with no neighbor of the new
/// vertex (needed once the graph may contain triangles); unset, a `[t]`
/// class only promises a common neighbor and may span edges when `r >= 4`.
pub struct WitnessPainter {
    state: WitnessState,
    proper: bool,
    check: bool,
    violation: Option<(usize, String)>,
    last: Option<Branch>,
}

impl WitnessPainter {
    pub fn new(t: usize, n: usize, proper: bool) -> Self {
        WitnessPainter {
            state: WitnessState::new(t.max(1), n.max(1)),
            proper,
            check: true,
            violation: None,
            last: None,
        }
    }

    /// Uses the default `t` for `n`.
    pub fn with_default_t(n: usize, proper: bool) -> Self {
        Self::new(default_t(n), n, proper)
    }

    /// Disables the per-step invariant check.
    pub fn unchecked(mut self) -> Self {
        self.check = false;
        self
    }

    pub fn state(&self) -> &WitnessState {
        &self.state
    }

    /// First invariant violation seen by the per-step check.
    pub fn violation(&self) -> Option<&(usize, String)> {
        self.violation.as_ref()
    }

    pub fn last_branch(&self) -> Option<Branch> {
        self.last
    }
}

impl Painter for WitnessPainter {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        let v = view.vertex();
        let (c, branch) = self.state.step(view.graph, v, view.neighbors(), self.proper)?;
        self.last = Some(branch);
        if self.check && self.violation.is_none() && c >= self.state.t {
            if let Err(e) = self.state.check_class(view.graph, c - self.state.t) {
                self.violation = Some((v, e));
            }
        }
        Some(c)
    }

    fn name(&self) -> String {
        format!("witness:t={},n={},proper={}", self.state.t, self.state.n, self.proper)
    }
}

/// Splits every class of `inner` into blocks of at most `s` vertices, each
/// block getting its own color (numbered by first use).
pub struct SplitClasses<P> {
    pub inner: P,
    s: usize,
    inner_colors: Vec<Color>,
    sizes: HashMap<Color, usize>,
    outer: HashMap<(Color, usize), Color>,
}

impl<P: Painter> SplitClasses<P> {
    pub fn new(inner: P, s: usize) -> Self {
        assert!(s >= 1, "block size must be positive");
        SplitClasses {
            inner,
            s,
            inner_colors: Vec::new(),
            sizes: HashMap::new(),
            outer: HashMap::new(),
        }
    }

    pub fn block_size(&self) -> usize {
        self.s
    }

    pub fn inner_colors(&self) -> &[Color] {
        &self.inner_colors
    }

    pub fn colors_used(&self) -> usize {
        self.outer.len()
    }
}

impl<P: Painter> Painter for SplitClasses<P> {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        let inner_view = PainterView {
            graph: view.graph,
            colors: &self.inner_colors,
            palette: usize::MAX,
        };
        let c = self.inner.color(&inner_view)?;
        self.inner_colors.push(c);
        let k = self.sizes.entry(c).or_insert(0);
        let block = *k / self.s;
        *k += 1;
        let next = self.outer.len();
        Some(*self.outer.entry((c, block)).or_insert(next))
    }

    fn name(&self) -> String {
        format!("split:s={},inner={}", self.s, self.inner.name())
    }
}

/// Per-level parameters of [`RecursivePainter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    /// Rounds this level is built for.
    pub n: usize,
    pub t: usize,
    pub s: usize,
}

struct ClassRun {
    members: Vec<usize>,
    local: Graph,
    colors: Vec<Color>,
    sub: Box<RecursivePainter>,
}

/// `K_r`-free painter: two-palette classes split to size `s`, then the
/// `(r-1)` strategy on each class with its own colors.
pub struct RecursivePainter {
    r: usize,
    levels: Vec<Level>,
    outer: Option<SplitClasses<WitnessPainter>>,
    runs: HashMap<Color, ClassRun>,
    global: HashMap<(Color, Color), Color>,
}

impl RecursivePainter {
    /// Default `t` and `s` at every level, starting from `n` rounds.
    pub fn paper(r: usize, n: usize) -> Self {
        let mut levels = Vec::new();
        let mut m = n.max(1);
        for _ in 3..=r {
            let s = default_s(m);
            levels.push(Level {
                n: m,
                t: default_t(m),
                s,
            });
            m = s;
        }
        Self::with_levels(r, levels)
    }

    /// Explicit `(t, s)` per level, outermost first; level `i + 1` is built
    /// for `s_i` rounds.
    pub fn with_schedule(r: usize, n: usize, schedule: &[(usize, usize)]) -> Result<Self, String> {
        if r < 2 {
            return Err("recursive painter needs r >= 2".into());
        }
        if schedule.len() != r - 2 {
            return Err(format!(
                "need {} (t, s) pairs for r = {r}, got {}",
                r - 2,
                schedule.len()
            ));
        }
        let mut levels = Vec::new();
        let mut m = n.max(1);
        for &(t, s) in schedule {
            if t == 0 || s == 0 {
                return Err("t and s must be positive".into());
            }
            levels.push(Level { n: m, t, s });
            m = s;
        }
        Ok(Self::with_levels(r, levels))
    }

    fn with_levels(r: usize, levels: Vec<Level>) -> Self {
        assert!(r >= 2 && levels.len() == r - 2);
        let outer = levels
            .first()
            .map(|l| SplitClasses::new(WitnessPainter::new(l.t, l.n, false).unchecked(), l.s));
        RecursivePainter {
            r,
            levels,
            outer,
            runs: HashMap::new(),
            global: HashMap::new(),
        }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// `(2t + ⌈n/s⌉)` outer classes times the bound one level down; 1 for `r = 2`.
    pub fn color_bound(&self) -> usize {
        self.levels.iter().map(|l| 2 * l.t + l.n.div_ceil(l.s)).product()
    }

    /// Outer classes opened so far and the most colors any class used.
    pub fn ledger(&self) -> (usize, usize) {
        let widest = self.runs.values().map(|run| distinct(&run.colors)).max().unwrap_or(0);
        (self.runs.len(), widest)
    }

    pub fn colors_used(&self) -> usize {
        if self.r == 2 {
            usize::from(!self.runs.is_empty() || !self.global.is_empty())
        } else {
            self.global.len()
        }
    }
}

fn distinct(cs: &[Color]) -> usize {
    let mut v = cs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

impl Painter for RecursivePainter {
    fn color(&mut self, view: &PainterView<'_>) -> Option<Color> {
        let Some(outer) = self.outer.as_mut() else {
            self.global.entry((0, 0)).or_insert(0);
            return Some(0);
        };
        let o = outer.color(view)?;
        let v = view.vertex();
        let levels = &self.levels;
        let r = self.r;
        let run = self.runs.entry(o).or_insert_with(|| ClassRun {
            members: Vec::new(),
            local: Graph::empty(0),
            colors: Vec::new(),
            sub: Box::new(RecursivePainter::with_levels(r - 1, levels[1..].to_vec())),
        });
        let local_nbrs: Vec<usize> = run
            .members
            .iter()
            .enumerate()
            .filter(|&(_, &u)| view.graph.has_edge(u, v))
            .map(|(i, _)| i)
            .collect();
        run.local.push_vertex(&local_nbrs);
        run.members.push(v);
        let sub_view = PainterView {
            graph: &run.local,
            colors: &run.colors,
            palette: usize::MAX,
        };
        let c = run.sub.color(&sub_view)?;
        run.colors.push(c);
        let next = self.global.len();
        Some(*self.global.entry((o, c)).or_insert(next))
    }

    fn name(&self) -> String {
        let sched: Vec<String> = self.levels.iter().map(|l| format!("{}/{}", l.t, l.s)).collect();
        format!(
            "recursive:r={},n={},levels={}",
            self.r,
            self.levels.first().map_or(0, |l| l.n),
            sched.join(";")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contains_clique;
    use crate::online::{
        play, verify_transcript, FixedGraphBuilder, GameConfig, Outcome, RandomBuilder, TrivialBuilder,
    };

    fn cfg(n: usize, r: usize, palette: usize) -> GameConfig {
        GameConfig { n, r, palette, seed: 0 }
    }

    #[test]
    fn defaults() {
        assert_eq!(default_t(2), 1);
        // 4 * 100 * ln ln 100 / ln 100 = 132.6
        assert_eq!(default_t(100), 132);
        assert_eq!(default_s(100), 1);
        // ln(2^64 - 1) / (8 ln ln(2^64 - 1)) = 44.36 / 30.32
        assert_eq!(default_s(usize::MAX), 1);
    }

    #[test]
    fn isolated_vertex_takes_free_l_color() {
        let g = Graph::empty(1);
        let mut st = WitnessState::new(3, 10);
        assert_eq!(st.step(&g, 0, &[], true), Some((0, Branch::Free)));
    }

    #[test]
    fn open_branch_gets_t_over_two_witnesses() {
        // vertices 0..4 carry L colors 0..4; the next vertex sees all of L
        let t = 4;
        let mut g = Graph::empty(t);
        let mut st = WitnessState::new(t, 100);
        st.colors = (0..t).collect();
        st.owner = vec![None; t];
        let v = g.push_vertex(&[0, 1, 2, 3]);
        let (c, b) = st.step(&g, v, &[0, 1, 2, 3], true).unwrap();
        assert_eq!((c, b), (t, Branch::Open));
        assert!(st.witnesses[0].len() as f64 >= t as f64 / 2.0);
        st.check_all(&g).unwrap();
        st.check_structure(&g).unwrap();
    }

    #[test]
    fn witness_invariants_against_random_builders() {
        for seed in 0..20 {
            for (p, t) in [(0.05, 4), (0.1, 8), (0.2, 8), (0.3, 16)] {
                let n = 150;
                let mut painter = WitnessPainter::new(t, n, true);
                let mut b = RandomBuilder::new(p, 3, seed);
                let tr = play(&mut b, &mut painter, &cfg(n, 3, 2 * t)).unwrap();
                verify_transcript(&tr).unwrap();
                assert!(painter.violation().is_none(), "{:?}", painter.violation());
                let g = tr.final_graph();
                painter.state().check_all(&g).unwrap();
                if tr.outcome == Outcome::PainterWon {
                    painter.state().check_structure(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        let mut p = SplitClasses::new(FirstFit, 5);
        let t = play(&mut TrivialBuilder, &mut p, &cfg(10, 3, 10)).unwrap();
        assert_eq!(t.colors_used(), 2);
        // inner classes of sizes (3, 3) and (4, 1)
        for (inner, expect) in [(vec![0, 1, 0, 1, 0, 1], 2), (vec![0, 0, 0, 0, 1], 3)] {
            let mut p = SplitClasses::new(ScriptedPainter::new(inner.clone()), 3);
            let t = play(&mut TrivialBuilder, &mut p, &cfg(inner.len(), 3, 10)).unwrap();
            assert_eq!(t.outcome, Outcome::PainterWon);
            assert_eq!(t.colors_used(), expect);
        }
    }

    #[test]
    fn split_blocks_are_bounded_and_ordered() {
        let mut p = SplitClasses::new(FirstFit, 2);
        let t = play(&mut TrivialBuilder, &mut p, &cfg(7, 3, 10)).unwrap();
        assert_eq!(t.colors, vec![0, 0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn recursive_r2_is_one_color() {
        let mut p = RecursivePainter::paper(2, 10);
        let t = play(&mut TrivialBuilder, &mut p, &cfg(10, 2, 1)).unwrap();
        assert_eq!(t.outcome, Outcome::PainterWon);
        assert_eq!(t.colors_used(), 1);
        assert_eq!(p.color_bound(), 1);
        let mut p = RecursivePainter::paper(2, 3);
        let e = play(&mut FixedGraphBuilder::path(3), &mut p, &cfg(3, 3, 5)).unwrap_err();
        assert!(matches!(e, crate::online::GameError::IllegalColor { .. }));
    }

    #[test]
    fn recursive_r3_on_edgeless_stream() {
        let mut p = RecursivePainter::with_schedule(3, 12, &[(2, 4)]).unwrap();
        let t = play(&mut TrivialBuilder, &mut p, &cfg(12, 3, 100)).unwrap();
        assert_eq!(t.colors_used(), 3);
        assert_eq!(p.ledger(), (3, 1));
    }

    #[test]
    fn recursive_ledger_matches_product_bound() {
        for r in 3..=5 {
            for seed in 0..10 {
                let n = 120;
                let sched = [(20, 6), (6, 3), (3, 2)][..r - 2].to_vec();
                let mut p = RecursivePainter::with_schedule(r, n, &sched).unwrap();
                let bound = p.color_bound();
                let mut b = RandomBuilder::new(0.3, r, seed);
                let t = play(&mut b, &mut p, &cfg(n, r, bound)).unwrap();
                verify_transcript(&t).unwrap();
                assert_eq!(
                    t.outcome,
                    Outcome::PainterWon,
                    "r={r} seed={seed} branches={:?}",
                    p.outer.as_ref().unwrap().inner.state().branches
                );
                assert!(!contains_clique(&t.final_graph(), r));
                let (classes, widest) = p.ledger();
                let sub_bound: usize = p.levels()[1..].iter().map(|l| 2 * l.t + l.n.div_ceil(l.s)).product();
                assert!(classes <= 2 * 20 + n.div_ceil(6));
                assert!(widest <= sub_bound);
                assert!(t.colors_used() <= classes * widest);
                assert!(t.colors_used() <= bound);
            }
        }
    }

    #[test]
    fn random_legal_stays_legal() {
        for seed in 0..5 {
            let mut b = RandomBuilder::new(0.2, 3, seed);
            let mut p = RandomLegal::new(seed);
            let t = play(&mut b, &mut p, &cfg(100, 3, 100)).unwrap();
            verify_transcript(&t).unwrap();
            assert_eq!(t.outcome, Outcome::PainterWon);
        }
    }
}
