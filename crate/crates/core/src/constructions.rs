//! Explicit constructions: the graph of all outcomes of a Builder strategy,
//! and an iterated Zykov-style blow-up `G_n` with exact fractional checks.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{clique_number, contains_clique, degeneracy_order, Graph, GraphError, OrderedGraph};
use crate::online::{Builder, BuilderStep, BuilderView, Color};
use crate::oracles::{
    fractional_chromatic, verify_weight_certificate, OracleError, OracleLimits, Verdict, WeightCertificate,
};
use crate::Rational;

pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("builder is not deterministic: two replays of {prefix:?} produced different moves")]
    NonDeterministic { prefix: Vec<Color> },
    #[error("builder move after {prefix:?} is not normalized: {message}")]
    NotNormalized { prefix: Vec<Color>, message: String },
    #[error("construction would have {predicted} vertices, limit is {limit}")]
    SizeLimit { predicted: String, limit: usize },
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Graph on the valid Painter color sequences against a fixed strategy.
#[derive(Clone, Debug)]
pub struct StrategyTreeResult {
    /// Vertex ids follow the by-length, then lexicographic, order.
    pub graph: OrderedGraph,
    pub labels: Vec<Vec<Color>>,
    /// Sequences with no valid one-color extension: Builder has won there.
    pub dead_ends: Vec<usize>,
    /// `sum_{i < N} d^i`.
    pub vertex_bound: u128,
    pub d: usize,
    pub r: usize,
    pub rounds: usize,
}

impl StrategyTreeResult {
    pub fn is_clique_free(&self) -> bool {
        !contains_clique(self.graph.graph(), self.r)
    }

    pub fn id_of(&self, label: &[Color]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// `sum_{i=0}^{N-1} d^i`, saturating.
pub fn tree_vertex_bound(d: usize, rounds: usize) -> u128 {
    let mut total: u128 = 0;
    let mut p: u128 = 1;
    for _ in 0..rounds {
        total = total.saturating_add(p);
        p = p.saturating_mul(d as u128);
    }
    total
}

/// Replays a fresh builder against `colors` and returns its next move
/// (an isolated vertex once the strategy is done), recording every move
/// on the way in `seen`.
fn replay<B: Builder>(
    builder: &mut B,
    colors: &[Color],
    seen: &mut HashMap<Vec<Color>, Vec<usize>>,
) -> Result<Vec<usize>, ConstructionError> {
    let mut graph = Graph::empty(0);
    for k in 0..=colors.len() {
        let mv = match builder.next_move(&BuilderView {
            graph: &graph,
            colors: &colors[..k],
        }) {
            BuilderStep::Present(m) => m.edges_to_previous,
            BuilderStep::Done => Vec::new(),
        };
        let prefix = colors[..k].to_vec();
        match seen.get(&prefix) {
            Some(prev) if *prev != mv => return Err(ConstructionError::NonDeterministic { prefix }),
            Some(_) => {}
            None => {
                seen.insert(prefix, mv.clone());
            }
        }
        if k == colors.len() {
            return Ok(mv);
        }
        graph.push_vertex(&mv);
    }
    unreachable!()
}

/// Enumerates every valid color sequence over `[d]` of length at most
/// `rounds - 1`, replaying a fresh builder from `make` for each. The
/// strategy must connect each vertex to at most `d` earlier vertices, no two
/// of the same color (wrap it in `Normalized` to enforce the latter).
pub fn strategy_tree_graph<B, F>(
    make: F,
    d: usize,
    r: usize,
    rounds: usize,
) -> Result<StrategyTreeResult, ConstructionError>
where
    B: Builder,
    F: Fn() -> B,
{
    if d == 0 || rounds == 0 || r < 2 {
        return Err(ConstructionError::Invalid(format!(
            "need d >= 1, N >= 1, r >= 2; got d={d}, N={rounds}, r={r}"
        )));
    }
    let bound = tree_vertex_bound(d, rounds);
    if bound > DEFAULT_SIZE_LIMIT as u128 {
        return Err(ConstructionError::SizeLimit {
            predicted: format!("up to {bound}"),
            limit: DEFAULT_SIZE_LIMIT,
        });
    }
    let mut seen = HashMap::new();
    let mut labels: Vec<Vec<Color>> = vec![Vec::new()];
    let mut ids: HashMap<Vec<Color>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut graph = Graph::empty(0);
    let mut dead_ends = Vec::new();
    let mut next = 0;
    while next < labels.len() {
        let label = labels[next].clone();
        let mv = replay(&mut make(), &label, &mut seen)?;
        if mv.len() > d {
            return Err(ConstructionError::NotNormalized {
                prefix: label,
                message: format!("{} edges, more than d = {d}", mv.len()),
            });
        }
        let mut blocked: Vec<Color> = mv.iter().map(|&j| label[j]).collect();
        blocked.sort_unstable();
        if blocked.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConstructionError::NotNormalized {
                prefix: label,
                message: "two neighbors share a color".into(),
            });
        }
        let nbrs: Vec<usize> = mv.iter().map(|&j| ids[&label[..j]]).collect();
        graph.push_vertex(&nbrs);
        if label.len() + 1 < rounds {
            let mut extended = false;
            for c in (0..d).filter(|c| blocked.binary_search(c).is_err()) {
                let mut child = label.clone();
                child.push(c);
                ids.insert(child.clone(), labels.len());
                labels.push(child);
                extended = true;
            }
            if !extended {
                dead_ends.push(next);
            }
        }
        next += 1;
    }
    let graph = OrderedGraph::with_identity_order(graph, d as f64, None)?;
    Ok(StrategyTreeResult {
        graph,
        labels,
        dead_ends,
        vertex_bound: bound,
        d,
        r,
        rounds,
    })
}

/// `G_n` with its layout: `d` copies of `G_(n-1)` first, then one copy of
/// `Gamma` per tuple `C` in lexicographic order over copy-local ids.
#[derive(Clone, Debug)]
pub struct ZykovLikeResult {
    /// Identity order, which witnesses `(d + x)`-degeneracy.
    pub graph: OrderedGraph,
    pub level: usize,
    pub d: usize,
    pub gamma_size: usize,
    /// Degeneracy `x` of `Gamma`.
    pub gamma_degeneracy: usize,
    pub gamma_clique: usize,
    /// `|V(G_k)|` for `k = 1..=level`.
    pub sizes: Vec<usize>,
}

impl ZykovLikeResult {
    /// Which top-level copy holds `v`, or `None` for a `Gamma_C` vertex.
    pub fn copy_of(&self, v: usize) -> Option<usize> {
        let prev = self.previous_size()?;
        (v < self.d * prev).then(|| v / prev)
    }

    /// The tuple `C` (as global ids) whose `Gamma` copy holds `v`.
    pub fn tuple_of(&self, v: usize) -> Option<Vec<usize>> {
        let prev = self.previous_size()?;
        let start = self.d * prev;
        if v < start {
            return None;
        }
        let mut block = (v - start) / self.gamma_size;
        let mut c = vec![0; self.d];
        for i in (0..self.d).rev() {
            c[i] = i * prev + block % prev;
            block /= prev;
        }
        Some(c)
    }

    fn previous_size(&self) -> Option<usize> {
        (self.level >= 2).then(|| self.sizes[self.level - 2])
    }
}

/// `|V(G_1)|, ..., |V(G_n)|` via `a_(k+1) = d a_k + a_k^d |Gamma|`, or
/// `None` on overflow.
pub fn zykov_sizes(gamma_size: usize, d: usize, n: usize) -> Vec<Option<u128>> {
    let mut out = vec![Some(1u128)];
    for _ in 1..n {
        let next = out.last().copied().flatten().and_then(|a| {
            let pow = (0..d).try_fold(1u128, |acc, _| acc.checked_mul(a))?;
            (d as u128)
                .checked_mul(a)?
                .checked_add(pow.checked_mul(gamma_size as u128)?)
        });
        out.push(next);
    }
    out
}

pub fn zykov_like(gamma: &Graph, d: usize, n: usize, size_limit: usize) -> Result<ZykovLikeResult, ConstructionError> {
    if n == 0 || d == 0 || gamma.n() == 0 {
        return Err(ConstructionError::Invalid(format!(
            "need n >= 1, d >= 1 and a nonempty Gamma; got n={n}, d={d}, |Gamma|={}",
            gamma.n()
        )));
    }
    let predicted = zykov_sizes(gamma.n(), d, n);
    let within: Option<Vec<u128>> = predicted
        .iter()
        .map(|s| s.filter(|&s| s <= size_limit as u128))
        .collect();
    let sizes: Vec<usize> = match within {
        Some(v) => v.into_iter().map(|s| s as usize).collect(),
        None => {
            let last = predicted.last().copied().flatten();
            return Err(ConstructionError::SizeLimit {
                predicted: last.map_or("more than 2^128".into(), |s| s.to_string()),
                limit: size_limit,
            });
        }
    };
    let (gamma_order, x) = degeneracy_order(gamma);
    let gamma_laid = gamma.induced(gamma_order.order());
    let mut g = Graph::empty(1);
    for _ in 1..n {
        g = zykov_step(&g, &gamma_laid, d);
    }
    debug_assert_eq!(g.n(), *sizes.last().unwrap());
    if g.n() != *sizes.last().unwrap() {
        return Err(ConstructionError::Invalid(
            "built size differs from the recurrence".into(),
        ));
    }
    let graph = OrderedGraph::with_identity_order(g, (d + x) as f64, None)?;
    Ok(ZykovLikeResult {
        graph,
        level: n,
        d,
        gamma_size: gamma.n(),
        gamma_degeneracy: x,
        gamma_clique: clique_number(gamma),
        sizes,
    })
}

/// One level of the blow-up. `gamma` must already be laid out in a
/// degeneracy order so that every block keeps left degree `<= d + x`.
fn zykov_step(prev: &Graph, gamma: &Graph, d: usize) -> Graph {
    let a = prev.n();
    let blocks = a.pow(d as u32);
    let mut g = Graph::empty(0);
    for i in 0..d {
        for v in 0..a {
            let nbrs: Vec<usize> = prev
                .neighbors(v)
                .iter()
                .filter(|&&u| u < v)
                .map(|&u| i * a + u)
                .collect();
            g.push_vertex(&nbrs);
        }
    }
    let mut tuple = vec![0usize; d];
    for _ in 0..blocks {
        let start = g.n();
        let c: Vec<usize> = tuple.iter().enumerate().map(|(i, &u)| i * a + u).collect();
        for v in 0..gamma.n() {
            let mut nbrs = c.clone();
            nbrs.extend(gamma.neighbors(v).iter().filter(|&&u| u < v).map(|&u| start + u));
            g.push_vertex(&nbrs);
        }
        // odometer, last coordinate fastest
        for i in (0..d).rev() {
            tuple[i] += 1;
            if tuple[i] < a {
                break;
            }
            tuple[i] = 0;
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct RecursionCheck {
    pub d: usize,
    pub level: usize,
    /// `chi_f` of `G_n`, `G_(n+1)` and `Gamma`, as `p/q`.
    pub chi_n: String,
    pub chi_next: String,
    pub chi_gamma: String,
    /// `1 / chi_f(G_(n+1))`.
    pub lhs: String,
    /// `(d/chi_n + (1 - 1/chi_n)^d / chi_gamma) / (d + 1)`.
    pub rhs: String,
    pub inequality_holds: bool,
    pub monotone: bool,
    /// The product weighting built from the optimal weights of `G_n` and
    /// `Gamma` keeps every independent set of `G_(n+1)` at most `rhs`.
    pub product_certificate_holds: bool,
    pub heaviest_product_weight: String,
}

impl RecursionCheck {
    pub fn all_hold(&self) -> bool {
        self.inequality_holds && self.monotone && self.product_certificate_holds
    }
}

fn text(r: &Rational) -> String {
    crate::oracles::ratio_text(r)
}

/// `w_(n+1)`: copies keep `w_n`; a `Gamma_C` vertex gets `w_Gamma(v)` times
/// the product of `w_n` over `C`. Sums to `d + 1`.
pub fn product_weights(level: &ZykovLikeResult, w_prev: &[Rational], w_gamma: &[Rational]) -> Vec<Rational> {
    let g = level.graph.graph();
    let prev = w_prev.len();
    (0..g.n())
        .map(|v| match level.copy_of(v) {
            Some(i) => w_prev[v - i * prev].clone(),
            None => {
                let c = level.tuple_of(v).expect("block vertex");
                let local = (v - level.d * prev) % level.gamma_size;
                let mut w = w_gamma[local].clone();
                for (i, &u) in c.iter().enumerate() {
                    w *= &w_prev[u - i * prev];
                }
                w
            }
        })
        .collect()
}

pub fn check_fractional_recursion(
    gamma: &Graph,
    d: usize,
    n: usize,
    limits: &OracleLimits,
) -> Result<RecursionCheck, ConstructionError> {
    let g_n = zykov_like(gamma, d, n, DEFAULT_SIZE_LIMIT)?;
    let g_next = zykov_like(gamma, d, n + 1, DEFAULT_SIZE_LIMIT)?;
    let f_n = fractional_chromatic::<Rational>(g_n.graph.graph(), limits.fractional)?;
    let f_next = fractional_chromatic::<Rational>(g_next.graph.graph(), limits.fractional)?;
    // weights of Gamma in the laid-out order used inside every block
    let (gamma_order, _) = degeneracy_order(gamma);
    let gamma_laid = gamma.induced(gamma_order.order());
    let f_gamma = fractional_chromatic::<Rational>(&gamma_laid, limits.fractional)?;
    let (chi_n, chi_next, chi_gamma) = (f_n.value.clone(), f_next.value.clone(), f_gamma.value.clone());
    let inv_n = chi_n.recip();
    let dd = Rational::from_integer(d.into());
    let mut tail = Rational::one();
    for _ in 0..d {
        tail *= Rational::one() - &inv_n;
    }
    let rhs = (&dd * &inv_n + tail * chi_gamma.recip()) / (&dd + Rational::one());
    let lhs = chi_next.recip();
    let w_prev: Vec<Rational> = f_n.dual.iter().map(|w| w / &chi_n).collect();
    let w_gamma: Vec<Rational> = f_gamma.dual.iter().map(|w| w / &chi_gamma).collect();
    let weights: Vec<Rational> = product_weights(&g_next, &w_prev, &w_gamma)
        .into_iter()
        .map(|w| w / (&dd + Rational::one()))
        .collect();
    let cert = WeightCertificate {
        weights,
        bound: rhs.clone(),
    };
    let verdict = verify_weight_certificate(g_next.graph.graph(), &cert, limits.max_weight)?;
    let heaviest = match &verdict {
        Verdict::Certified { weight, .. } | Verdict::Violated { weight, .. } => weight.clone(),
    };
    Ok(RecursionCheck {
        d,
        level: n,
        chi_n: text(&chi_n),
        chi_next: text(&chi_next),
        chi_gamma: text(&chi_gamma),
        inequality_holds: lhs <= rhs,
        lhs: text(&lhs),
        rhs: text(&rhs),
        monotone: chi_n <= chi_next,
        product_certificate_holds: verdict.holds(),
        heaviest_product_weight: text(&heaviest),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelValue {
    pub level: usize,
    pub vertices: usize,
    pub chi_f: String,
    /// `d / chi_f(G_n)`.
    pub ratio: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecursionTrajectory {
    pub d: usize,
    pub chi_gamma: String,
    /// `ln(d / chi_f(Gamma) + 3)`, the bound on the limit.
    pub threshold: f64,
    pub levels: Vec<LevelValue>,
    /// Whether the deepest computed level is already below the threshold.
    /// Informational: the bound concerns the limit `n -> infinity`.
    pub deepest_within_threshold: bool,
}

/// `d / chi_f(G_n)` for `n = 1..=depth`, stopping at the first level beyond
/// the exact oracle's size limit.
pub fn check_recursion_lemma(
    gamma: &Graph,
    d: usize,
    depth: usize,
    limits: &OracleLimits,
) -> Result<RecursionTrajectory, ConstructionError> {
    let chi_gamma = fractional_chromatic::<Rational>(gamma, limits.fractional)?.value;
    let ratio = |chi: &Rational| d as f64 / chi.to_f64().unwrap_or(f64::NAN);
    let threshold = (ratio(&chi_gamma) + 3.0).ln();
    let mut levels = Vec::new();
    for n in 1..=depth {
        let size = zykov_sizes(gamma.n(), d, n).last().copied().flatten();
        if size.is_none_or(|s| s > limits.fractional as u128) {
            break;
        }
        let g = zykov_like(gamma, d, n, limits.fractional)?;
        let chi = fractional_chromatic::<Rational>(g.graph.graph(), limits.fractional)?.value;
        levels.push(LevelValue {
            level: n,
            vertices: g.graph.n(),
            chi_f: text(&chi),
            ratio: ratio(&chi),
        });
    }
    if levels.is_empty() {
        return Err(ConstructionError::Invalid("no level fits the oracle size limit".into()));
    }
    let deepest_within_threshold = levels.last().is_some_and(|l| l.ratio <= threshold);
    Ok(RecursionTrajectory {
        d,
        chi_gamma: text(&chi_gamma),
        threshold,
        levels,
        deepest_within_threshold,
    })
}
