//! Coloring by peeling off sampled independent sets.
//!
//! At each level the colorer runs `l` rounds; each round samples an
//! independent set of the residual graph (inherited order, current `d` and
//! `f`), gives it a fresh color and deletes it. If afterwards every residual
//! vertex has at most `d/2` residual left-neighbors, it recurses on the
//! residual with `(d/2, f/4)`; otherwise the level is re-run with a fresh
//! seed, up to a restart budget. Small `d` (or, optionally, large `n`) ends
//! the recursion with greedy coloring along the inherited order.
//!
//! Desk mode (the default) takes `l` and `alpha` directly. With the default
//! `l = floor(d) - floor(d/2)` and a large `alpha`, the process is close to
//! greedy: a residual vertex is skipped almost only when a left-neighbor was
//! taken, so its left-degree drops every round, and a triangle-free
//! `d`-degenerate graph needs at most `d + 1` colors in total.
//!
//! Paper mode derives `l`, `beta` and `alpha` from `(d, f, n)` and the
//! constants `C` and `c`, and refuses inputs outside `n <= 2^(cd)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{greedy_coloring, is_independent, is_proper_coloring, GraphError, OrderedGraph, VertexSet};
use crate::sampler::{mix_seed, sample_capped, sample_sparse, SamplerError, SamplerParams};

#[derive(Debug, Error)]
pub enum PeelError {
    #[error("level {level}: residual still above d/2 after {attempts} attempts")]
    RestartBudgetExhausted {
        level: usize,
        attempts: usize,
        trace: Box<PeelTrace>,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("removed sets overlap at vertex {0}")]
    OverlappingClasses(usize),
    #[error(transparent)]
    Sampler(#[from] SamplerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeelMode {
    Desk,
    Paper,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeelParams {
    pub mode: PeelMode,
    /// `C` (paper mode).
    pub big_c: f64,
    /// `c` (paper mode).
    pub small_c: f64,
    /// Rounds per level (desk mode); `None` means `floor(d) - floor(d/2)`.
    pub rounds: Option<usize>,
    /// Initial weight (desk mode).
    pub alpha: f64,
    pub seed: u64,
    pub restart_budget: usize,
    /// Greedy-color once `d` is at most this.
    pub base_degree: f64,
    /// Desk mode: greedy-color any level with more vertices than this.
    pub greedy_above: Option<usize>,
    /// Keep the per-vertex residual left-degree after every round.
    pub record_y: bool,
}

pub const DESK_ALPHA: f64 = 12.0;

impl Default for PeelParams {
    fn default() -> Self {
        PeelParams {
            mode: PeelMode::Desk,
            big_c: 1e4,
            small_c: 1e-9,
            rounds: None,
            alpha: DESK_ALPHA,
            seed: 0,
            restart_budget: 50,
            base_degree: 4.0,
            greedy_above: None,
            record_y: false,
        }
    }
}

impl PeelParams {
    pub fn desk(seed: u64) -> Self {
        PeelParams {
            seed,
            ..Self::default()
        }
    }

    pub fn paper(seed: u64) -> Self {
        PeelParams {
            mode: PeelMode::Paper,
            seed,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub num_colors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub class_size: usize,
    pub residual: usize,
    pub max_residual_left_degree: usize,
    pub in_guarantee: bool,
    /// Residual left-degree per original vertex id (`None` once removed).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelTrace {
    pub d: f64,
    pub f: Option<f64>,
    pub vertices: usize,
    pub rounds: usize,
    pub alpha: f64,
    pub beta: Option<f64>,
    /// `4 beta e^(2 beta)`, for comparison with observed per-round drops.
    /// Diagnostic only; the algorithm never reads it.
    pub tau: Option<f64>,
    pub attempts: usize,
    /// Rounds of the accepted attempt (or the last attempt on failure).
    pub records: Vec<RoundRecord>,
    /// Nonempty classes, i.e. colors spent at this level.
    pub colors: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailReason {
    SmallDegree,
    LargeGraph,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailTrace {
    pub reason: TailReason,
    pub vertices: usize,
    pub max_left_degree: usize,
    pub colors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PeelTrace {
    pub levels: Vec<LevelTrace>,
    pub tail: Option<TailTrace>,
    pub restarts: usize,
}

impl PeelTrace {
    /// Colors the trace accounts for.
    pub fn colors(&self) -> usize {
        self.levels.iter().map(|l| l.colors).sum::<usize>() + self.tail.as_ref().map_or(0, |t| t.colors)
    }

    /// Upper bound from the trace: rounds per level plus tail degeneracy + 1.
    pub fn color_budget(&self) -> usize {
        self.levels.iter().map(|l| l.rounds).sum::<usize>()
            + self
                .tail
                .as_ref()
                .map_or(0, |t| if t.vertices == 0 { 0 } else { t.max_left_degree + 1 })
    }

    /// Checks that the coloring's color count equals the trace's ledger and
    /// respects the per-level budget, and that residual sizes never grow.
    pub fn check(&self, coloring: &Coloring) -> Result<(), String> {
        if coloring.num_colors != self.colors() {
            return Err(format!(
                "{} colors used, trace accounts for {}",
                coloring.num_colors,
                self.colors()
            ));
        }
        if self.colors() > self.color_budget() {
            return Err(format!(
                "{} colors exceed the budget {}",
                self.colors(),
                self.color_budget()
            ));
        }
        for (li, level) in self.levels.iter().enumerate() {
            let mut prev = level.vertices;
            let mut prev_max = usize::MAX;
            for r in &level.records {
                if r.residual > prev || r.residual + r.class_size != prev {
                    return Err(format!("level {li}: residual sizes inconsistent"));
                }
                if r.max_residual_left_degree > prev_max {
                    return Err(format!("level {li}: residual left-degree grew"));
                }
                prev = r.residual;
                prev_max = r.max_residual_left_degree;
            }
            if level.colors > level.rounds {
                return Err(format!(
                    "level {li}: {} colors in {} rounds",
                    level.colors, level.rounds
                ));
            }
        }
        Ok(())
    }
}

/// Survivor left-degrees after deleting `removed` from `og`. The flag is true
/// iff every survivor has at most `threshold` surviving left-neighbors; the
/// vector holds the surviving left-degree per vertex id (0 for removed ones).
pub fn residual_degeneracy_check(
    og: &OrderedGraph,
    removed: &[VertexSet],
    threshold: f64,
) -> Result<(bool, Vec<usize>), PeelError> {
    let n = og.n();
    let mut alive = vec![true; n];
    for set in removed {
        for v in set.iter() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
            }
            if !alive[v] {
                return Err(PeelError::OverlappingClasses(v));
            }
            alive[v] = false;
        }
    }
    let g = og.graph();
    let mut degrees = vec![0; n];
    for v in (0..n).filter(|&v| alive[v]) {
        let pv = og.position_of(v);
        degrees[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&u| alive[u] && og.position_of(u) < pv)
            .count();
    }
    let ok = degrees.iter().all(|&k| k as f64 <= threshold);
    Ok((ok, degrees))
}

/// Per-level parameters.
struct LevelPlan {
    rounds: usize,
    alpha: f64,
    beta: Option<f64>,
}

fn plan(p: &PeelParams, d: f64, f: Option<f64>, n: usize) -> Result<LevelPlan, PeelError> {
    match p.mode {
        PeelMode::Desk => {
            let rounds = p
                .rounds
                .unwrap_or_else(|| (d.floor() - (d / 2.0).floor()).max(1.0) as usize);
            if rounds == 0 {
                return Err(PeelError::InvalidParams("rounds must be at least 1".into()));
            }
            if !(p.alpha > 0.0) {
                return Err(PeelError::InvalidParams(format!(
                    "alpha must be positive, got {}",
                    p.alpha
                )));
            }
            Ok(LevelPlan {
                rounds,
                alpha: p.alpha,
                beta: None,
            })
        }
        PeelMode::Paper => {
            let f_eff = f.unwrap_or(d * d);
            let ln_n = (n.max(1) as f64).ln();
            let m = if ln_n > 0.0 {
                f_eff.ln().min((d / ln_n).ln())
            } else {
                f_eff.ln()
            };
            if !(m > 0.0) {
                return Err(PeelError::Hypothesis(format!(
                    "min(log f, log(d/log n)) = {m} is not positive"
                )));
            }
            let rounds = (p.big_c * d / (3.0 * m)).ceil() as usize;
            let beta = 0.1 * m;
            Ok(LevelPlan {
                rounds: rounds.max(1),
                alpha: beta / f_eff.sqrt(),
                beta: Some(beta),
            })
        }
    }
}

fn left_degrees_alive(left: &[Vec<usize>], alive: &[bool]) -> Vec<Option<usize>> {
    (0..left.len())
        .map(|i| alive[i].then(|| left[i].iter().filter(|&&j| alive[j]).count()))
        .collect()
}

pub fn peel_color(og: &OrderedGraph, p: &PeelParams) -> Result<(Coloring, PeelTrace), PeelError> {
    let n = og.n();
    if p.mode == PeelMode::Paper {
        let limit = (p.small_c * og.d()).exp2();
        if n as f64 > limit {
            return Err(PeelError::Hypothesis(format!("n = {n} exceeds 2^(cd) = {limit}")));
        }
        if og.d() <= (n.max(1) as f64).ln() {
            return Err(PeelError::Hypothesis(format!("d = {} is at most log n", og.d())));
        }
    }
    let mut color = vec![usize::MAX; n];
    let mut next_color = 0;
    let mut trace = PeelTrace::default();

    // The current level works on positions 0..cur.n() of `cur`; `ids` maps
    // them back to original vertex ids.
    let (mut cur, mut ids) = og.induced_ordered(|_| true, og.d(), og.f())?;
    let mut level = 0;
    loop {
        let d = cur.d();
        let m = cur.n();
        let large = match p.mode {
            PeelMode::Desk => p.greedy_above.is_some_and(|t| m > t),
            PeelMode::Paper => m as f64 > (p.small_c * d / 2.0).exp2(),
        };
        if d <= p.base_degree || large || m == 0 {
            let order: Vec<usize> = (0..m).collect();
            let tail = greedy_coloring(cur.graph(), &order);
            let colors = tail.iter().max().map_or(0, |c| c + 1);
            for (v, c) in tail.into_iter().enumerate() {
                color[ids[v]] = next_color + c;
            }
            next_color += colors;
            trace.tail = Some(TailTrace {
                reason: if d <= p.base_degree || m == 0 {
                    TailReason::SmallDegree
                } else {
                    TailReason::LargeGraph
                },
                vertices: m,
                max_left_degree: cur.max_left_degree(),
                colors,
            });
            break;
        }

        let lp = plan(p, d, cur.f(), m)?;
        let left = cur.left_positions();
        let level_seed = mix_seed(p.seed, level as u64);
        let mut accepted = None;
        let mut last = None;
        for attempt in 0..p.restart_budget.max(1) {
            let attempt_seed = mix_seed(level_seed, attempt as u64);
            let mut alive = vec![true; m];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            let mut records = Vec::new();
            let mut remaining = m;
            for round in 0..lp.rounds {
                if remaining == 0 {
                    break;
                }
                let (sub, map) = cur.induced_ordered(|v| alive[v], d, cur.f())?;
                let seed = mix_seed(attempt_seed, round as u64);
                let sample = match cur.f() {
                    None => sample_capped(&sub, &SamplerParams::new(lp.alpha, d, seed))?,
                    Some(_) => sample_sparse(&sub, lp.alpha, seed)?,
                };
                assert!(
                    is_independent(sub.graph(), &sample.set),
                    "sampled class must be independent"
                );
                let class: Vec<usize> = sample.set.iter().map(|v| map[v]).collect();
                for &v in &class {
                    alive[v] = false;
                }
                remaining -= class.len();
                let y = left_degrees_alive(&left, &alive);
                let max_y = y.iter().flatten().copied().max().unwrap_or(0);
                records.push(RoundRecord {
                    class_size: class.len(),
                    residual: remaining,
                    max_residual_left_degree: max_y,
                    in_guarantee: sample.regime.in_guarantee(),
                    y: p.record_y.then(|| {
                        let mut by_id = vec![None; n];
                        for (i, yi) in y.iter().enumerate() {
                            by_id[ids[i]] = *yi;
                        }
                        by_id
                    }),
                });
                if !class.is_empty() {
                    classes.push(class);
                }
            }
            let max_y = records
                .last()
                .map_or_else(|| cur.max_left_degree(), |r| r.max_residual_left_degree);
            let ok = max_y as f64 <= d / 2.0;
            let record = (attempt + 1, records, classes, alive);
            if ok {
                accepted = Some(record);
                break;
            }
            trace.restarts += 1;
            last = Some(record);
        }
        let tau = lp.beta.map(|b| 4.0 * b * (2.0 * b).exp());
        let Some((attempts, records, classes, alive)) = accepted else {
            let (attempts, records, _, _) = last.expect("at least one attempt");
            trace.levels.push(LevelTrace {
                d,
                f: cur.f(),
                vertices: m,
                rounds: lp.rounds,
                alpha: lp.alpha,
                beta: lp.beta,
                tau,
                attempts,
                records,
                colors: 0,
            });
            return Err(PeelError::RestartBudgetExhausted {
                level,
                attempts,
                trace: Box::new(trace),
            });
        };
        for class in &classes {
            for &v in class {
                color[ids[v]] = next_color;
            }
            next_color += 1;
        }
        trace.levels.push(LevelTrace {
            d,
            f: cur.f(),
            vertices: m,
            rounds: lp.rounds,
            alpha: lp.alpha,
            beta: lp.beta,
            tau,
            attempts,
            records,
            colors: classes.len(),
        });
        let next_f = cur.f().map(|f| f / 4.0).filter(|&f| f > 2.0);
        let (next, map) = cur.induced_ordered(|v| alive[v], d / 2.0, next_f)?;
        ids = map.into_iter().map(|v| ids[v]).collect();
        cur = next;
        level += 1;
    }
    debug_assert!(color.iter().all(|&c| c != usize::MAX));
    let coloring = Coloring {
        color,
        num_colors: next_color,
    };
    assert!(
        is_proper_coloring(og.graph(), &coloring.color),
        "peeling produced an improper coloring"
    );
    Ok((coloring, trace))
}
