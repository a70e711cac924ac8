//! The capped random weight process on ordered graphs.
//!
//! Every vertex starts with weight `alpha`. Walking the order, vertex `v_i`
//! first has its weight zeroed if it exceeds `alpha * e^(2 alpha d)`, then
//! joins `I` with probability `1 - e^(-w)`. Joining zeroes the weights of
//! its right-neighbors; skipping multiplies them by `e^w`. The result is
//! always independent.
//!
//! All randomness for step `i` comes from a generator keyed by
//! `(seed, i)`, so the outcome on a prefix of the order does not depend on
//! anything after it, pathwise and not just in distribution.

pub mod exact;
pub mod stats;

use num_traits::Float;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{contains_clique, GraphError, OrderedGraph, VertexSet};

pub use exact::{exact_marginals, ExactMarginals};
pub use stats::{clopper_pearson, estimate_marginals, estimate_sparse_marginals, MarginalReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SamplerError {
    #[error("left-degree {left_degree} at position {position} exceeds d = {d}")]
    LeftDegreeExceeded {
        position: usize,
        left_degree: usize,
        d: f64,
    },
    #[error("alpha must be positive and finite, got {0}")]
    InvalidAlpha(f64),
    #[error("d must be at least 1, got {0}")]
    InvalidDegree(f64),
    #[error("sparse sampling needs a declared f with 2 < f < d^2")]
    MissingSparsity,
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("exact enumeration is limited to {limit} vertices, graph has {n}")]
    TooLargeForEnumeration { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parameters of the process. `F` is the floating type the weights live in.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplerParams<F = f64> {
    pub alpha: F,
    pub d: F,
    pub cap_enabled: bool,
    pub seed: u64,
}

impl<F: Float> SamplerParams<F> {
    pub fn new(alpha: F, d: F, seed: u64) -> Self {
        SamplerParams {
            alpha,
            d,
            cap_enabled: true,
            seed,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SamplerParams { seed, ..self }
    }

    /// `alpha * e^(2 alpha d)`, or `None` with the cap disabled.
    pub fn cap(&self) -> Option<F> {
        let two = F::one() + F::one();
        self.cap_enabled.then(|| self.alpha * (two * self.alpha * self.d).exp())
    }

    /// Upper end of the admissible range for `alpha`: `ln(d) / (4d)`.
    pub fn alpha_limit(d: F) -> F {
        d.ln() / (F::from(4.0).unwrap() * d)
    }

    fn validate(&self) -> Result<(), SamplerError> {
        let a = self.alpha.to_f64().unwrap_or(f64::NAN);
        if !(a > 0.0 && a.is_finite()) {
            return Err(SamplerError::InvalidAlpha(a));
        }
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        if !(d >= 1.0 && d.is_finite()) {
            return Err(SamplerError::InvalidDegree(d));
        }
        Ok(())
    }
}

/// Which hypotheses of the marginal guarantee hold for a run. Runs outside
/// the guarantee are allowed; they are only tagged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub cap_enabled: bool,
    pub alpha_in_range: bool,
    pub triangle_free: bool,
}

impl Regime {
    pub fn in_guarantee(&self) -> bool {
        self.cap_enabled && self.alpha_in_range && self.triangle_free
    }
}

/// Checks the left-degree precondition and classifies the parameters.
pub fn regime<F: Float>(og: &OrderedGraph, p: &SamplerParams<F>) -> Result<Regime, SamplerError> {
    p.validate()?;
    let d = p.d.to_f64().unwrap();
    for (position, &left_degree) in og.left_degrees().iter().enumerate() {
        if left_degree as f64 > d {
            return Err(SamplerError::LeftDegreeExceeded {
                position,
                left_degree,
                d,
            });
        }
    }
    Ok(Regime {
        cap_enabled: p.cap_enabled,
        alpha_in_range: p.alpha < SamplerParams::alpha_limit(p.d),
        triangle_free: !contains_clique(og.graph(), 3),
    })
}

/// SplitMix64 finalizer.
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent 64-bit key from a seed and an index.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    splitmix(seed ^ splitmix(index.wrapping_add(0x5851_F42D_4C95_7F2D)))
}

/// The uniform draw used at step `position`.
fn step_uniform<F: Float>(seed: u64, position: usize) -> F {
    let mut rng = SmallRng::seed_from_u64(mix_seed(seed, position as u64));
    F::from(rng.gen::<f64>()).unwrap()
}

/// Right-neighbor positions, computed once per graph and reused by trials.
pub struct Prepared<'a> {
    og: &'a OrderedGraph,
    right: Vec<Vec<usize>>,
}

impl<'a> Prepared<'a> {
    pub fn new(og: &'a OrderedGraph) -> Self {
        Prepared {
            og,
            right: og.right_positions(),
        }
    }

    pub fn graph(&self) -> &OrderedGraph {
        self.og
    }
}

/// Outcome of one run, indexed by position.
#[derive(Clone, Debug)]
pub(crate) struct Run<F> {
    pub included: Vec<bool>,
    /// Weight of each vertex at the moment of its own step (after the cap).
    pub flip_weight: Vec<F>,
    /// All weights after the last executed step.
    pub weights: Vec<F>,
    pub capped: usize,
}

/// Runs steps `0..steps`. Positions with `forced_skip` set always take the
/// "not included" branch.
pub(crate) fn run_process<F: Float>(
    prep: &Prepared<'_>,
    p: &SamplerParams<F>,
    steps: usize,
    forced_skip: Option<&[bool]>,
) -> Run<F> {
    let n = prep.og.n();
    let cap = p.cap();
    let mut weights = vec![p.alpha; n];
    let mut included = vec![false; n];
    let mut flip_weight = vec![F::zero(); n];
    let mut capped = 0;
    for i in 0..steps.min(n) {
        if let Some(c) = cap {
            if weights[i] > c {
                weights[i] = F::zero();
                capped += 1;
            }
            assert!(weights[i] <= c, "weight above cap at its own step");
        }
        let w = weights[i];
        flip_weight[i] = w;
        let u: F = step_uniform(p.seed, i);
        let forced = forced_skip.is_some_and(|s| s[i]);
        // include with probability 1 - e^{-w}
        if !forced && u < -(-w).exp_m1() {
            included[i] = true;
            for &j in &prep.right[i] {
                weights[j] = F::zero();
            }
        } else if w > F::zero() {
            let factor = w.exp();
            for &j in &prep.right[i] {
                weights[j] = weights[j] * factor;
            }
        }
    }
    Run {
        included,
        flip_weight,
        weights,
        capped,
    }
}

/// A sampled independent set with the diagnostics of the run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    /// Vertex ids of `I`.
    pub set: VertexSet,
    pub regime: Regime,
    /// Vertices whose weight was zeroed by the cap.
    pub capped: usize,
    /// Largest weight at which an inclusion coin was flipped.
    pub max_flip_weight: f64,
}

pub fn sample_capped<F: Float>(og: &OrderedGraph, p: &SamplerParams<F>) -> Result<Sample, SamplerError> {
    let regime = regime(og, p)?;
    Ok(sample_prepared(&Prepared::new(og), p, regime))
}

/// [`sample_capped`] without re-validating; `regime` is copied into the result.
pub fn sample_prepared<F: Float>(prep: &Prepared<'_>, p: &SamplerParams<F>, regime: Regime) -> Sample {
    let run = run_process(prep, p, prep.og.n(), None);
    Sample {
        set: positions_to_set(prep.og, &run.included),
        regime,
        capped: run.capped,
        max_flip_weight: run.flip_weight.iter().map(|w| w.to_f64().unwrap()).fold(0.0, f64::max),
    }
}

fn positions_to_set(og: &OrderedGraph, included: &[bool]) -> VertexSet {
    included
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| og.vertex_at(i))
        .collect()
}

/// State of the shadow process just before position `k` is processed.
#[derive(Clone, Debug, PartialEq)]
pub struct Shadow<F> {
    /// Shadow weights indexed by vertex id.
    pub weights: Vec<F>,
    /// Sum of the shadow weights over the left-neighborhood of `v_k`.
    pub x: F,
    pub left: VertexSet,
}

/// Runs the process up to (not including) position `k` (0-based), forcing
/// every left-neighbor of `v_k` to take the "not included" branch.
pub fn shadow_weights<F: Float>(og: &OrderedGraph, p: &SamplerParams<F>, k: usize) -> Result<Shadow<F>, SamplerError> {
    p.validate()?;
    shadow_prepared(&Prepared::new(og), p, k)
}

pub fn shadow_prepared<F: Float>(
    prep: &Prepared<'_>,
    p: &SamplerParams<F>,
    k: usize,
) -> Result<Shadow<F>, SamplerError> {
    let og = prep.og;
    let left = og.left_neighborhood(k)?;
    let mut forced = vec![false; og.n()];
    for v in left.iter() {
        forced[og.position_of(v)] = true;
    }
    let run = run_process(prep, p, k, Some(&forced));
    let mut weights = vec![F::zero(); og.n()];
    for (i, w) in run.weights.iter().enumerate() {
        weights[og.vertex_at(i)] = *w;
    }
    let x = left.iter().fold(F::zero(), |s, v| s + weights[v]);
    Ok(Shadow { weights, x, left })
}

/// Result of the sparse-to-triangle-free reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct Subsample {
    /// Ordered graph on `U` with `d' = sqrt(f)` and no `f`.
    pub graph: OrderedGraph,
    /// `original[j]` is the original id of vertex `j` of `graph`.
    pub original: Vec<usize>,
    /// The random superset `V` of `U`.
    pub kept: VertexSet,
}

const SUBSAMPLE_TAG: u64 = 0x5355_4253_414d_504c;
const SPARSE_PROCESS_TAG: u64 = 0x5350_4152_5345_5052;

/// Keeps each vertex with probability `sqrt(f)/(2d)`, then drops every kept
/// vertex whose kept left-neighborhood has more than `sqrt(f)` vertices or
/// contains an edge.
pub fn subsample_sparse(og: &OrderedGraph, seed: u64) -> Result<Subsample, SamplerError> {
    let f = og.f().ok_or(SamplerError::MissingSparsity)?;
    let root = f.sqrt();
    let p = root / (2.0 * og.d());
    let sub_seed = mix_seed(seed, SUBSAMPLE_TAG);
    let n = og.n();
    let mut in_v = vec![false; n];
    for (i, slot) in in_v.iter_mut().enumerate() {
        *slot = step_uniform::<f64>(sub_seed, i) < p;
    }
    let g = og.graph();
    let left = og.left_positions();
    let mut in_u = vec![false; n];
    for i in 0..n {
        if !in_v[i] {
            continue;
        }
        let nl: Vec<usize> = left[i].iter().copied().filter(|&j| in_v[j]).collect();
        if nl.len() as f64 > root {
            continue;
        }
        let independent = nl.iter().enumerate().all(|(a, &x)| {
            nl[a + 1..]
                .iter()
                .all(|&y| !g.has_edge(og.vertex_at(x), og.vertex_at(y)))
        });
        in_u[i] = independent;
    }
    let (graph, original) = og.induced_ordered(|v| in_u[og.position_of(v)], root, None)?;
    assert!(!contains_clique(graph.graph(), 3), "subsample must be triangle-free");
    assert!(
        graph.max_left_degree() as f64 <= root,
        "subsample exceeds sqrt(f) left-degree"
    );
    let kept = (0..n).filter(|&i| in_v[i]).map(|i| og.vertex_at(i)).collect();
    Ok(Subsample { graph, original, kept })
}

/// Upper end of the admissible range for `alpha` in the sparse setting:
/// `ln(f) / (8 sqrt f)`.
pub fn sparse_alpha_limit(f: f64) -> f64 {
    f.ln() / (8.0 * f.sqrt())
}

/// Subsamples, then runs the capped process on the triangle-free remainder
/// with `d' = sqrt(f)`. The returned set uses original vertex ids.
pub fn sample_sparse<F: Float>(og: &OrderedGraph, alpha: F, seed: u64) -> Result<Sample, SamplerError> {
    let sub = subsample_sparse(og, seed)?;
    let params = SamplerParams::new(
        alpha,
        F::from(sub.graph.d()).unwrap(),
        mix_seed(seed, SPARSE_PROCESS_TAG),
    );
    let inner = sample_capped(&sub.graph, &params)?;
    Ok(Sample {
        set: inner.set.iter().map(|v| sub.original[v]).collect(),
        ..inner
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::{degeneracy_order, is_independent, Graph};
    use proptest::prelude::*;

    fn ordered(g: Graph) -> OrderedGraph {
        degeneracy_order(&g).0
    }

    #[test]
    fn results_are_independent_and_deterministic() {
        let og = random_triangle_free_degenerate(80, 4, 3);
        for seed in 0..50 {
            let p = SamplerParams::new(0.05, 4.0, seed);
            let a = sample_capped(&og, &p).unwrap();
            assert!(is_independent(og.graph(), &a.set));
            assert_eq!(a, sample_capped(&og, &p).unwrap());
            assert!(a.regime.in_guarantee());
            assert!(a.max_flip_weight <= p.cap().unwrap());
        }
    }

    #[test]
    fn regime_flags() {
        let og = ordered(cycle(5));
        let r = regime(&og, &SamplerParams::new(0.05, 2.0, 0)).unwrap();
        assert!(r.in_guarantee());
        let r = regime(&og, &SamplerParams::new(0.5, 2.0, 0)).unwrap();
        assert!(!r.alpha_in_range && !r.in_guarantee());
        let mut p = SamplerParams::new(0.05, 2.0, 0);
        p.cap_enabled = false;
        assert!(!regime(&og, &p).unwrap().in_guarantee());
        let tri = ordered(complete(3));
        assert!(!regime(&tri, &SamplerParams::new(0.05, 2.0, 0)).unwrap().triangle_free);
        assert!(matches!(
            regime(&og, &SamplerParams::new(0.05, 1.0, 0)),
            Err(SamplerError::LeftDegreeExceeded { .. })
        ));
        assert!(matches!(
            regime(&og, &SamplerParams::new(0.0, 2.0, 0)),
            Err(SamplerError::InvalidAlpha(_))
        ));
    }

    #[test]
    fn empty_graph_gives_empty_set() {
        let og = OrderedGraph::with_identity_order(Graph::empty(0), 1.0, None).unwrap();
        assert!(sample_capped(&og, &SamplerParams::new(0.1, 1.0, 7))
            .unwrap()
            .set
            .is_empty());
    }

    #[test]
    fn tiny_alpha_gives_empty_set() {
        let og = ordered(petersen());
        let hits: usize = (0..200)
            .map(|s| {
                sample_capped(&og, &SamplerParams::new(1e-12, 3.0, s))
                    .unwrap()
                    .set
                    .len()
            })
            .sum();
        assert_eq!(hits, 0);
    }

    #[test]
    fn f32_weights_run() {
        let og = ordered(petersen());
        let s = sample_capped(&og, &SamplerParams::new(0.05f32, 3.0, 11)).unwrap();
        assert!(is_independent(og.graph(), &s.set));
    }

    #[test]
    fn shadow_examples() {
        let og = OrderedGraph::with_identity_order(path(2), 1.0, None).unwrap();
        let alpha: f64 = 0.1;
        let p = SamplerParams::new(alpha, 1.0, 5);
        let sh = shadow_weights(&og, &p, 1).unwrap();
        assert!((sh.weights[1] - alpha * alpha.exp()).abs() < 1e-15);
        assert!((sh.weights[1] - alpha * sh.x.exp()).abs() < 1e-15);
        let sh = shadow_weights(&og, &p, 0).unwrap();
        assert_eq!(sh.x, 0.0);
        assert!(sh.left.is_empty());

        let og = OrderedGraph::with_identity_order(Graph::empty(6), 1.0, None).unwrap();
        for k in 0..6 {
            let sh = shadow_weights(&og, &p, k).unwrap();
            assert!(sh.weights.iter().all(|&w| w == alpha));
            assert_eq!(sh.x, 0.0);
        }
        assert!(shadow_weights(&og, &p, 6).is_err());
    }

    #[test]
    fn shadow_weight_of_target_is_alpha_e_x() {
        for seed in 0..30 {
            let og = random_triangle_free_degenerate(40, 3, seed);
            let p = SamplerParams::new(0.08, 3.0, seed);
            for k in [5, 17, 39] {
                let sh = shadow_weights(&og, &p, k).unwrap();
                let v = og.vertex_at(k);
                let expect = 0.08 * sh.x.exp();
                assert!((sh.weights[v] - expect).abs() <= 1e-12 * expect);
            }
        }
    }

    #[test]
    fn subsample_edgeless_keeps_everything_sampled() {
        let og = OrderedGraph::with_identity_order(Graph::empty(4000), 4.0, Some(4.0)).unwrap();
        let sub = subsample_sparse(&og, 1).unwrap();
        assert_eq!(sub.graph.n(), sub.kept.len());
        let frac = sub.graph.n() as f64 / 4000.0;
        // p = 1/4, sd of the fraction is about 0.007
        assert!((frac - 0.25).abs() < 0.03, "kept fraction {frac}");
        assert_eq!(sub.graph.d(), 2.0);
        assert_eq!(sub.graph.f(), None);
    }

    #[test]
    fn subsample_requires_f() {
        let og = ordered(cycle(5));
        assert_eq!(subsample_sparse(&og, 0), Err(SamplerError::MissingSparsity));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn prefix_locality(n in 2usize..60, d in 1usize..6, gseed in any::<u64>(), seed in any::<u64>(), cut in 0usize..60) {
            let og = random_triangle_free_degenerate(n, d, gseed);
            let i = cut % (n + 1);
            let p = SamplerParams::new(0.1, d as f64, seed);
            let full = sample_capped(&og, &p).unwrap();
            let (pre, ids) = og.prefix(i).unwrap();
            let part = sample_capped(&pre, &p).unwrap();
            let mapped: VertexSet = part.set.iter().map(|v| ids[v]).collect();
            let restricted: VertexSet = full.set.iter().filter(|&v| og.position_of(v) < i).collect();
            prop_assert_eq!(mapped, restricted);
        }

        #[test]
        fn sparse_samples_are_independent_in_original(n in 5usize..80, gseed in any::<u64>(), seed in any::<u64>()) {
            let og = random_sparse_left(n, 6, 9.0, gseed);
            let s = sample_sparse(&og, 0.05, seed).unwrap();
            prop_assert!(is_independent(og.graph(), &s.set));
            let sub = subsample_sparse(&og, seed).unwrap();
            prop_assert!(!contains_clique(sub.graph.graph(), 3));
            prop_assert!(sub.graph.max_left_degree() as f64 <= 3.0);
        }

        #[test]
        fn capped_weights_never_exceed_cap(n in 2usize..60, d in 2usize..6, gseed in any::<u64>(), seed in any::<u64>(), alpha in 0.01f64..2.0) {
            let og = random_triangle_free_degenerate(n, d, gseed);
            let p = SamplerParams::new(alpha, d as f64, seed);
            let s = sample_capped(&og, &p).unwrap();
            prop_assert!(s.max_flip_weight <= p.cap().unwrap());
            prop_assert!(is_independent(og.graph(), &s.set));
        }
    }
}
