//! Independent-set enumeration and maximum-weight independent sets on
//! small graphs, using 64-bit vertex masks.

use num_traits::Zero;

use super::OracleError;
use crate::graph::{Graph, VertexSet};

pub(crate) const MASK_BITS: usize = 64;

pub(crate) fn check_size(g: &Graph, limit: usize, oracle: &'static str) -> Result<(), OracleError> {
    let limit = limit.min(MASK_BITS);
    if g.n() > limit {
        Err(OracleError::GraphTooLarge {
            oracle,
            n: g.n(),
            limit,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_set(mut m: u64) -> VertexSet {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    VertexSet::from(out)
}

/// All maximal independent sets, sorted. Runs Bron–Kerbosch with pivoting on
/// the complement graph (maximal independent sets are maximal cliques of the
/// complement).
pub fn enumerate_maximal_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, OracleError> {
    check_size(g, limit, "maximal independent set enumeration")?;
    let n = g.n();
    let all = full_mask(n);
    let adj = adjacency_masks(g);
    let non_adj: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1u64 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(mask_to_set).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let mut best = 0u32;
    let mut pivot = 0usize;
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let c = (p & nbr[u]).count_ones();
        if c >= best {
            best = c;
            pivot = u;
        }
    }
    let mut candidates = p & !nbr[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << v;
        bron_kerbosch(nbr, r | bit, p & nbr[v], x & nbr[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Every independent set, including the empty set. Exponential; meant for
/// brute-force cross-checks on tiny graphs.
pub fn enumerate_all_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, OracleError> {
    check_size(g, limit.min(24), "independent set enumeration")?;
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    for m in 0..(1u64 << g.n()) {
        let mut ok = true;
        let mut rest = m;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & m != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(mask_to_set(m));
        }
    }
    Ok(out)
}

/// An independent set of maximum total weight, and that weight. Weights must
/// be nonnegative; zero-weight vertices are never needed and are skipped.
pub fn max_weight_independent_set<T>(g: &Graph, weights: &[T], limit: usize) -> Result<(VertexSet, T), OracleError>
where
    T: Clone + PartialOrd + Zero + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    check_size(g, limit, "maximum-weight independent set")?;
    if weights.len() != g.n() {
        return Err(OracleError::WeightCountMismatch {
            expected: g.n(),
            got: weights.len(),
        });
    }
    if let Some(v) = weights.iter().position(|w| *w < T::zero()) {
        return Err(OracleError::NegativeWeight(v));
    }
    let adj = adjacency_masks(g);
    // heaviest first so the include-branch finds good incumbents early
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| !weights[v].is_zero()).collect();
    order.sort_by(|&a, &b| weights[b].partial_cmp(&weights[a]).unwrap_or(std::cmp::Ordering::Equal));
    let mut search = MwisSearch {
        adj: &adj,
        weights,
        order: &order,
        best: T::zero(),
        best_mask: 0,
    };
    let cand = order.iter().fold(0u64, |m, &v| m | (1 << v));
    let remaining = order.iter().fold(T::zero(), |s, &v| s + weights[v].clone());
    search.run(0, cand, T::zero(), remaining, 0);
    Ok((mask_to_set(search.best_mask), search.best))
}

struct MwisSearch<'a, T> {
    adj: &'a [u64],
    weights: &'a [T],
    order: &'a [usize],
    best: T,
    best_mask: u64,
}

impl<T> MwisSearch<'_, T>
where
    T: Clone + PartialOrd + Zero + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    fn run(&mut self, chosen: u64, cand: u64, current: T, remaining: T, from: usize) {
        if current > self.best {
            self.best = current.clone();
            self.best_mask = chosen;
        }
        if cand == 0 || !(current.clone() + remaining.clone() > self.best) {
            return;
        }
        let Some(idx) = (from..self.order.len()).find(|&i| cand & (1 << self.order[i]) != 0) else {
            return;
        };
        let v = self.order[idx];
        let w = self.weights[v].clone();
        // include v
        let dropped = cand & (self.adj[v] | (1 << v));
        let mut lost = T::zero();
        let mut rest = dropped;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            lost = lost + self.weights[u].clone();
        }
        self.run(
            chosen | (1 << v),
            cand & !dropped,
            current.clone() + w.clone(),
            remaining.clone() - lost,
            idx + 1,
        );
        // exclude v
        self.run(chosen, cand & !(1 << v), current, remaining - w, idx + 1);
    }
}
