//! Monte-Carlo marginal estimates with exact binomial confidence intervals.

use num_traits::Float;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::beta::inv_beta_reg;

use super::{
    mix_seed, regime, sample_prepared, sample_sparse, sparse_alpha_limit, Prepared, Regime, SamplerError, SamplerParams,
};
use crate::graph::OrderedGraph;

/// Two-sided Clopper–Pearson interval for `k` successes in `n` trials at the
/// given confidence level.
pub fn clopper_pearson(k: u64, n: u64, confidence: f64) -> (f64, f64) {
    assert!(n > 0 && k <= n, "need 0 <= k <= n, n > 0");
    let tail = (1.0 - confidence) / 2.0;
    let (k, n) = (k as f64, n as f64);
    let lower = if k == 0.0 {
        0.0
    } else {
        inv_beta_reg(k, n - k + 1.0, tail)
    };
    let upper = if k == n {
        1.0
    } else {
        inv_beta_reg(k + 1.0, n - k, 1.0 - tail)
    };
    (lower, upper)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginalReport {
    pub trials: u64,
    pub confidence: f64,
    /// Hit counts, indexed by vertex id.
    pub counts: Vec<u64>,
    pub frequency: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Guaranteed lower bound on every marginal.
    pub threshold: f64,
    /// Vertices whose upper confidence bound is below the threshold.
    pub flagged: Vec<usize>,
    pub regime: Regime,
}

impl MarginalReport {
    pub fn from_counts(counts: Vec<u64>, trials: u64, confidence: f64, threshold: f64, regime: Regime) -> Self {
        let frequency = counts.iter().map(|&c| c as f64 / trials as f64).collect();
        let (lower, upper): (Vec<f64>, Vec<f64>) =
            counts.iter().map(|&c| clopper_pearson(c, trials, confidence)).unzip();
        let flagged = (0..counts.len()).filter(|&v| upper[v] < threshold).collect();
        MarginalReport {
            trials,
            confidence,
            counts,
            frequency,
            lower,
            upper,
            threshold,
            flagged,
            regime,
        }
    }

    /// Vertices whose lower confidence bound is below the threshold.
    pub fn not_certified(&self) -> Vec<usize> {
        (0..self.counts.len())
            .filter(|&v| self.lower[v] < self.threshold)
            .collect()
    }

    pub fn min_lower(&self) -> f64 {
        self.lower.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Counts per-vertex hits of `sample(trial_seed)` over `trials` derived seeds.
pub fn count_hits<S>(n: usize, trials: u64, seed: u64, sample: S) -> Vec<u64>
where
    S: Fn(u64) -> Vec<usize> + Sync,
{
    (0..trials)
        .into_par_iter()
        .fold(
            || vec![0u64; n],
            |mut acc, t| {
                for v in sample(mix_seed(seed, t)) {
                    acc[v] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Runs the capped process `trials` times with per-trial seeds derived from
/// `p.seed`. The threshold is `alpha / 4`.
pub fn estimate_marginals<F: Float + Send + Sync>(
    og: &OrderedGraph,
    p: &SamplerParams<F>,
    trials: u64,
    confidence: f64,
) -> Result<MarginalReport, SamplerError> {
    if trials == 0 {
        return Err(SamplerError::NoTrials);
    }
    let regime = regime(og, p)?;
    let prep = Prepared::new(og);
    let counts = count_hits(og.n(), trials, p.seed, |s| {
        sample_prepared(&prep, &p.with_seed(s), regime).set.into_vec()
    });
    let threshold = p.alpha.to_f64().unwrap() / 4.0;
    Ok(MarginalReport::from_counts(
        counts, trials, confidence, threshold, regime,
    ))
}

/// Same for the sparse sampler; the threshold is `alpha sqrt(f) / (32 d)`.
/// The reported regime additionally requires `alpha < ln f / (8 sqrt f)`.
pub fn estimate_sparse_marginals(
    og: &OrderedGraph,
    alpha: f64,
    seed: u64,
    trials: u64,
    confidence: f64,
) -> Result<MarginalReport, SamplerError> {
    if trials == 0 {
        return Err(SamplerError::NoTrials);
    }
    let f = og.f().ok_or(SamplerError::MissingSparsity)?;
    // surface parameter errors before spawning trials
    sample_sparse(og, alpha, seed)?;
    let counts = count_hits(og.n(), trials, seed, |s| {
        sample_sparse(og, alpha, s).expect("validated above").set.into_vec()
    });
    let regime = Regime {
        cap_enabled: true,
        alpha_in_range: alpha > 0.0 && alpha < sparse_alpha_limit(f),
        triangle_free: true,
    };
    let threshold = alpha * f.sqrt() / (32.0 * og.d());
    Ok(MarginalReport::from_counts(
        counts, trials, confidence, threshold, regime,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degeneracy_order;
    use crate::graph::generators::*;
    use crate::graph::Graph;

    #[test]
    fn clopper_pearson_known_values() {
        // n = 10, k = 0 at 95%: upper = 1 - 0.025^(1/10)
        let (lo, hi) = clopper_pearson(0, 10, 0.95);
        assert_eq!(lo, 0.0);
        assert!((hi - (1.0 - 0.025f64.powf(0.1))).abs() < 1e-9);
        let (lo, hi) = clopper_pearson(10, 10, 0.95);
        assert!((lo - 0.025f64.powf(0.1)).abs() < 1e-9);
        assert_eq!(hi, 1.0);
        // symmetric case
        let (lo, hi) = clopper_pearson(50, 100, 0.95);
        assert!((lo + hi - 1.0).abs() < 1e-9);
        assert!(lo < 0.5 && hi > 0.5);
    }

    #[test]
    fn edgeless_frequencies_match_closed_form() {
        let og = OrderedGraph::with_identity_order(Graph::empty(6), 1.0, None).unwrap();
        let trials = 100_000;
        let r = estimate_marginals(&og, &SamplerParams::new(0.1, 1.0, 42), trials, 0.99).unwrap();
        let p = 1.0 - (-0.1f64).exp();
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        for &f in &r.frequency {
            assert!((f - p).abs() <= 3.0 * sigma, "frequency {f} vs {p}");
        }
        assert!(r.counts.iter().all(|&c| c <= trials));
    }

    #[test]
    fn c5_marginals_clear_alpha_over_four() {
        let (og, _) = degeneracy_order(&cycle(5));
        let r = estimate_marginals(&og, &SamplerParams::new(0.05, 2.0, 9), 100_000, 0.99).unwrap();
        assert!(r.regime.in_guarantee());
        assert!(r.not_certified().is_empty(), "min lower bound {}", r.min_lower());
        assert!(r.flagged.is_empty());
    }

    #[test]
    fn sparse_edgeless_marginal() {
        let og = OrderedGraph::with_identity_order(Graph::empty(3), 4.0, Some(4.0)).unwrap();
        let trials = 100_000;
        let r = estimate_sparse_marginals(&og, 0.1, 1, trials, 0.99).unwrap();
        let p = 0.25 * (1.0 - (-0.1f64).exp());
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        for &f in &r.frequency {
            assert!((f - p).abs() <= 4.0 * sigma, "frequency {f} vs {p}");
        }
    }

    #[test]
    fn zero_trials_rejected() {
        let og = OrderedGraph::with_identity_order(Graph::empty(1), 1.0, None).unwrap();
        assert_eq!(
            estimate_marginals(&og, &SamplerParams::new(0.1, 1.0, 0), 0, 0.99),
            Err(SamplerError::NoTrials)
        );
    }
}
