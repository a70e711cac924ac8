//! Fractional chromatic number as an exact linear program.
//!
//! Primal (covering): minimize `sum x_I` over maximal independent sets `I`
//! subject to `sum_{I ∋ v} x_I >= 1` for every vertex. Dual (packing):
//! maximize `sum w_v` subject to `sum_{v ∈ I} w_v <= 1` for every maximal
//! independent set. Any primal mass on a non-maximal set can be moved to a
//! maximal superset without breaking a constraint, and every independent set
//! lies in a maximal one, so restricting both programs to maximal sets leaves
//! the optimum unchanged.
//!
//! The packing program is solved directly (its all-slack basis is feasible);
//! the covering solution is read off the optimal dictionary as its dual.

use super::independent::{enumerate_maximal_independent_sets, max_weight_independent_set};
use super::lp::{maximize_packing, ExactField};
use super::OracleError;
use crate::graph::{is_independent, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq)]
pub struct FractionalResult<T> {
    /// `chi_f(G)`.
    pub value: T,
    /// Independent sets with positive weight `x_I`.
    pub primal: Vec<(VertexSet, T)>,
    /// Vertex weights `w_v`, indexed by vertex id.
    pub dual: Vec<T>,
}

pub fn fractional_chromatic<T: ExactField>(g: &Graph, limit: usize) -> Result<FractionalResult<T>, OracleError> {
    let n = g.n();
    if n > limit {
        return Err(OracleError::GraphTooLarge {
            oracle: "fractional chromatic number",
            n,
            limit,
        });
    }
    let sets = enumerate_maximal_independent_sets(g, limit)?;
    let rows: Vec<Vec<T>> = sets
        .iter()
        .map(|s| {
            let mut row = vec![T::zero(); n];
            for v in s.iter() {
                row[v] = T::one();
            }
            row
        })
        .collect();
    let sol = maximize_packing(&vec![T::one(); n], &rows, &vec![T::one(); sets.len()])?;
    let primal = sets.into_iter().zip(sol.dual).filter(|(_, x)| !x.is_zero()).collect();
    Ok(FractionalResult {
        value: sol.objective,
        primal,
        dual: sol.primal,
    })
}

impl<T: ExactField> FractionalResult<T> {
    /// Re-checks both solutions against the graph from scratch: the primal is
    /// a fractional cover by independent sets, the dual packs every
    /// independent set (checked by a maximum-weight search, not against the
    /// LP's own rows), and both objectives equal `value`.
    pub fn verify(&self, g: &Graph, limit: usize) -> Result<(), OracleError> {
        let n = g.n();
        let bad = |m: String| Err(OracleError::InvalidSolution(m));
        let mut cover = vec![T::zero(); n];
        let mut primal_sum = T::zero();
        for (set, x) in &self.primal {
            if x.is_negative() {
                return bad(format!("negative primal weight on {:?}", set.as_slice()));
            }
            if set.iter().any(|v| v >= n) || !is_independent(g, set) {
                return bad(format!("primal set {:?} is not independent", set.as_slice()));
            }
            for v in set.iter() {
                cover[v] = cover[v].clone() + x.clone();
            }
            primal_sum = primal_sum + x.clone();
        }
        if let Some(v) = cover.iter().position(|c| *c < T::one()) {
            return bad(format!("vertex {v} covered only {}", cover[v]));
        }
        if primal_sum != self.value {
            return bad(format!(
                "primal objective {primal_sum} differs from value {}",
                self.value
            ));
        }
        let dual_sum = self.dual.iter().fold(T::zero(), |s, w| s + w.clone());
        if dual_sum != self.value {
            return bad(format!("dual objective {dual_sum} differs from value {}", self.value));
        }
        let (set, weight) = max_weight_independent_set(g, &self.dual, limit)?;
        if weight > T::one() {
            return bad(format!("independent set {:?} has dual weight {weight}", set.as_slice()));
        }
        Ok(())
    }
}
