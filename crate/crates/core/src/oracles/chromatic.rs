//! Exact chromatic number by branch and bound.
//!
//! The clique number gives the lower bound and a greedy coloring along the
//! degeneracy order the upper bound. Between them, each candidate `k` is
//! decided by backtracking over the degeneracy order, opening at most one new
//! color class per step (classes are interchangeable).

use super::independent::{adjacency_masks, check_size};
use super::OracleError;
use crate::graph::{clique_number, degeneracy_order, greedy_coloring, Graph};

/// `chi(G)` together with an optimal coloring.
pub fn optimal_coloring(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>), OracleError> {
    check_size(g, limit, "chromatic number")?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let (og, _) = degeneracy_order(g);
    let order = og.order().to_vec();
    let upper_coloring = greedy_coloring(g, &order);
    let upper = upper_coloring.iter().max().map_or(0, |c| c + 1);
    let lower = clique_number(g);
    let adj = adjacency_masks(g);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; g.n()];
        if color_with(&adj, &order, k, 0, 0, &mut colors) {
            return Ok((k, colors));
        }
    }
    Ok((upper, upper_coloring))
}

pub fn chromatic_number(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    optimal_coloring(g, limit).map(|(k, _)| k)
}

fn color_with(adj: &[u64], order: &[usize], k: usize, depth: usize, used: usize, colors: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut forbidden = 0u64;
    let mut nbrs = adj[v];
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if colors[u] != usize::MAX {
            forbidden |= 1 << colors[u];
        }
    }
    let limit = k.min(used + 1);
    for c in 0..limit {
        if forbidden & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if color_with(adj, order, k, depth + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
