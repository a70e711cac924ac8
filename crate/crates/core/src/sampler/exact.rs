//! Exact marginals of the capped process by enumerating every branch.
//!
//! Each step either includes its vertex or not, so a run is a path in a
//! binary tree of depth `n`; zero-weight steps have a single branch. The
//! probability of each leaf is the product of its branch probabilities, and
//! summing leaves gives `Pr[v in I]` for every vertex. Arithmetic is in `F`
//! (use `f64`), which is accurate to about `n` ulps here.

use num_traits::Float;

use super::{regime, Regime, SamplerError, SamplerParams};
use crate::graph::OrderedGraph;

pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct ExactMarginals<F> {
    /// `Pr[v in I]`, indexed by vertex id.
    pub marginals: Vec<F>,
    /// Largest conditional inclusion probability `1 - e^(-w)` over every
    /// reachable branch point. Conditioning on the branch prefix is the same
    /// as conditioning on `I` restricted to the earlier vertices.
    pub max_branch_inclusion: F,
    /// Reachable leaves of the branch tree.
    pub leaves: usize,
    pub regime: Regime,
}

pub fn exact_marginals<F: Float>(og: &OrderedGraph, p: &SamplerParams<F>) -> Result<ExactMarginals<F>, SamplerError> {
    let n = og.n();
    if n > ENUMERATION_LIMIT {
        return Err(SamplerError::TooLargeForEnumeration {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let regime = regime(og, p)?;
    let mut walk = Walk {
        right: og.right_positions(),
        cap: p.cap(),
        by_position: vec![F::zero(); n],
        max_branch: F::zero(),
        leaves: 0,
    };
    let mut included = vec![false; n];
    walk.descend(0, vec![p.alpha; n], F::one(), &mut included);
    let mut marginals = vec![F::zero(); n];
    for (i, m) in walk.by_position.iter().enumerate() {
        marginals[og.vertex_at(i)] = *m;
    }
    Ok(ExactMarginals {
        marginals,
        max_branch_inclusion: walk.max_branch,
        leaves: walk.leaves,
        regime,
    })
}

struct Walk<F> {
    right: Vec<Vec<usize>>,
    cap: Option<F>,
    by_position: Vec<F>,
    max_branch: F,
    leaves: usize,
}

impl<F: Float> Walk<F> {
    fn descend(&mut self, i: usize, mut weights: Vec<F>, prob: F, included: &mut Vec<bool>) {
        if i == weights.len() {
            self.leaves += 1;
            for (j, &b) in included.iter().enumerate() {
                if b {
                    self.by_position[j] = self.by_position[j] + prob;
                }
            }
            return;
        }
        if let Some(c) = self.cap {
            if weights[i] > c {
                weights[i] = F::zero();
            }
        }
        let w = weights[i];
        let p_in = -(-w).exp_m1();
        if p_in > self.max_branch {
            self.max_branch = p_in;
        }
        if p_in > F::zero() {
            let mut inc = weights.clone();
            for &j in &self.right[i] {
                inc[j] = F::zero();
            }
            included[i] = true;
            self.descend(i + 1, inc, prob * p_in, included);
            included[i] = false;
        }
        let factor = w.exp();
        for &j in &self.right[i] {
            weights[j] = weights[j] * factor;
        }
        self.descend(i + 1, weights, prob * (-w).exp(), included);
    }
}
