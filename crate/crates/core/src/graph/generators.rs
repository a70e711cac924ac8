//! Named graphs and seeded random families used by tests, experiments and
//! the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, OrderedGraph};

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("simple")
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("simple")
}

/// Mycielskian of a graph: vertices `v`, shadows `n + v`, apex `2n`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for v in 0..n {
        edges.push((n + v, 2 * n));
    }
    Graph::from_edges(2 * n + 1, edges).expect("simple")
}

/// The Grötzsch graph: the Mycielskian of `C_5` (11 vertices, triangle-free,
/// chromatic number 4).
pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5))
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

/// Random triangle-free graph with left-degree at most `d` under the
/// identity order. Each new vertex proposes up to `d` random earlier
/// vertices and keeps a proposal only if it is non-adjacent to the proposals
/// already kept, so every left-neighborhood is independent.
pub fn random_triangle_free_degenerate(n: usize, d: usize, seed: u64) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(0);
    for i in 0..n {
        let mut candidates: Vec<usize> = (0..i).collect();
        candidates.shuffle(&mut rng);
        let mut chosen: Vec<usize> = Vec::with_capacity(d);
        for &u in &candidates {
            if chosen.len() >= d {
                break;
            }
            if chosen.iter().all(|&w| !g.has_edge(u, w)) {
                chosen.push(u);
            }
        }
        g.push_vertex(&chosen);
    }
    OrderedGraph::with_identity_order(g, d.max(1) as f64, None).expect("generated within bounds")
}

/// Random graph whose identity order has left-degree at most `d` and whose
/// left-neighborhoods span at most `floor(d^2 / f)` edges.
pub fn random_sparse_left(n: usize, d: usize, f: f64, seed: u64) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = ((d * d) as f64 / f).floor() as usize;
    let mut g = Graph::empty(0);
    for i in 0..n {
        let mut candidates: Vec<usize> = (0..i).collect();
        candidates.shuffle(&mut rng);
        let mut chosen: Vec<usize> = Vec::with_capacity(d);
        let mut edges = 0;
        for &u in &candidates {
            if chosen.len() >= d {
                break;
            }
            let extra = chosen.iter().filter(|&&w| g.has_edge(u, w)).count();
            if edges + extra <= budget {
                edges += extra;
                chosen.push(u);
            }
        }
        g.push_vertex(&chosen);
    }
    OrderedGraph::with_identity_order(g, d as f64, Some(f)).expect("generated within bounds")
}
