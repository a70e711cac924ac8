//! Undirected simple graphs, vertex orderings and the structural predicates
//! every other module builds on.

pub mod format;
pub mod generators;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("position {position} out of range for an ordering of {n} vertices")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("ordering is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("declared left-degree bound d = {0} must be at least 1")]
    InvalidDegreeBound(f64),
    #[error("declared sparsity f = {f} must lie in (2, d^2) = (2, {d_squared})")]
    InvalidSparsity { f: f64, d_squared: f64 },
    #[error("vertex at position {position} has {left_degree} left-neighbors, more than d = {d}")]
    LeftDegreeExceeded {
        position: usize,
        left_degree: usize,
        d: f64,
    },
    #[error("left-neighborhood at position {position} spans {edges} edges, more than d^2/f = {bound}")]
    LeftEdgesExceeded { position: usize, edges: usize, bound: f64 },
    #[error("vertex set must be nonempty")]
    EmptySet,
}

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
        }
        Ok(Graph {
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self::from_edges(n, set)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Appends a vertex adjacent to `neighbors` (all existing vertices) and
    /// returns its id. Adjacency lists stay sorted because the new id is the
    /// largest.
    pub(crate) fn push_vertex(&mut self, neighbors: &[usize]) -> usize {
        let v = self.adj.len();
        let mut ns = neighbors.to_vec();
        ns.sort_unstable();
        ns.dedup();
        for &u in &ns {
            debug_assert!(u < v);
            self.adj[u].push(v);
        }
        self.adj.push(ns);
        v
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union, with `other` relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&u| u + off).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        is_independent(self, s)
    }

    pub fn is_triangle_free(&self) -> bool {
        !contains_clique(self, 3)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A graph together with a vertex ordering `v_1, ..., v_n` that witnesses a
/// left-degree bound `d` and, optionally, a left-edge bound `d^2 / f`.
///
/// Positions are 0-based: `order[i]` is the vertex in position `i`. Both
/// bounds are re-validated on construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderedGraph {
    graph: Graph,
    order: Vec<usize>,
    position: Vec<usize>,
    d: f64,
    f: Option<f64>,
}

impl OrderedGraph {
    pub fn new(graph: Graph, order: Vec<usize>, d: f64, f: Option<f64>) -> Result<Self, GraphError> {
        let n = graph.n();
        if order.len() != n {
            return Err(GraphError::NotAPermutation(n));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(GraphError::NotAPermutation(n));
            }
            position[v] = i;
        }
        if !(d >= 1.0) || !d.is_finite() {
            return Err(GraphError::InvalidDegreeBound(d));
        }
        if let Some(f) = f {
            if !(f > 2.0 && f < d * d) {
                return Err(GraphError::InvalidSparsity { f, d_squared: d * d });
            }
        }
        let og = OrderedGraph {
            graph,
            order,
            position,
            d,
            f,
        };
        for i in 0..n {
            let left = og.left_degree(i);
            if left as f64 > d {
                return Err(GraphError::LeftDegreeExceeded {
                    position: i,
                    left_degree: left,
                    d,
                });
            }
            if let Some(f) = f {
                let edges = og.left_edges_at(i);
                let bound = d * d / f;
                if edges as f64 > bound {
                    return Err(GraphError::LeftEdgesExceeded {
                        position: i,
                        edges,
                        bound,
                    });
                }
            }
        }
        Ok(og)
    }

    /// Identity ordering `0, 1, ..., n-1`.
    pub fn with_identity_order(graph: Graph, d: f64, f: Option<f64>) -> Result<Self, GraphError> {
        let order = (0..graph.n()).collect();
        Self::new(graph, order, d, f)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn f(&self) -> Option<f64> {
        self.f
    }

    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i]
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Same graph and order with different declared bounds (re-validated).
    pub fn with_bounds(&self, d: f64, f: Option<f64>) -> Result<Self, GraphError> {
        Self::new(self.graph.clone(), self.order.clone(), d, f)
    }

    fn check_position(&self, i: usize) -> Result<(), GraphError> {
        if i < self.n() {
            Ok(())
        } else {
            Err(GraphError::PositionOutOfRange {
                position: i,
                n: self.n(),
            })
        }
    }

    fn left_degree(&self, i: usize) -> usize {
        let v = self.order[i];
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&&u| self.position[u] < i)
            .count()
    }

    fn left_edges_at(&self, i: usize) -> usize {
        let left = self.left_neighbors_at(i);
        count_edges_within(&self.graph, &left)
    }

    fn left_neighbors_at(&self, i: usize) -> Vec<usize> {
        let v = self.order[i];
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.position[u] < i)
            .collect()
    }

    /// Neighbors of `v_i` among `v_1, ..., v_{i-1}` (vertex ids).
    pub fn left_neighborhood(&self, i: usize) -> Result<VertexSet, GraphError> {
        self.check_position(i)?;
        Ok(self.left_neighbors_at(i).into_iter().collect())
    }

    /// Neighbors of `v_i` that come after it in the order (vertex ids).
    pub fn right_neighborhood(&self, i: usize) -> Result<VertexSet, GraphError> {
        self.check_position(i)?;
        let v = self.order[i];
        Ok(self
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.position[u] > i)
            .collect())
    }

    /// Number of edges spanned by `N_L(v_i)`.
    pub fn left_edge_count(&self, i: usize) -> Result<usize, GraphError> {
        self.check_position(i)?;
        Ok(self.left_edges_at(i))
    }

    /// Largest left-degree over all positions.
    pub fn max_left_degree(&self) -> usize {
        (0..self.n()).map(|i| self.left_degree(i)).max().unwrap_or(0)
    }

    /// Left-degrees indexed by position.
    pub fn left_degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.left_degree(i)).collect()
    }

    /// For each position `i`, the positions of its left-neighbors, sorted.
    pub fn left_positions(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|i| {
                let mut ps: Vec<usize> = self
                    .graph
                    .neighbors(self.order[i])
                    .iter()
                    .map(|&u| self.position[u])
                    .filter(|&p| p < i)
                    .collect();
                ps.sort_unstable();
                ps
            })
            .collect()
    }

    /// For each position `i`, the positions of its right-neighbors, sorted.
    pub fn right_positions(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|i| {
                let mut ps: Vec<usize> = self
                    .graph
                    .neighbors(self.order[i])
                    .iter()
                    .map(|&u| self.position[u])
                    .filter(|&p| p > i)
                    .collect();
                ps.sort_unstable();
                ps
            })
            .collect()
    }

    /// Ordered subgraph induced on `keep` (vertex ids), listed in the
    /// inherited order and relabelled `0..k` by position. Returns the new
    /// ordered graph and the original id of each new vertex.
    pub fn induced_ordered(
        &self,
        keep: impl Fn(usize) -> bool,
        d: f64,
        f: Option<f64>,
    ) -> Result<(OrderedGraph, Vec<usize>), GraphError> {
        let kept: Vec<usize> = self.order.iter().copied().filter(|&v| keep(v)).collect();
        let sub = self.graph.induced(&kept);
        let order = (0..kept.len()).collect();
        Ok((OrderedGraph::new(sub, order, d, f)?, kept))
    }

    /// The ordered prefix `G[v_1..v_k]` with the same declared bounds.
    pub fn prefix(&self, k: usize) -> Result<(OrderedGraph, Vec<usize>), GraphError> {
        let k = k.min(self.n());
        let kept: Vec<usize> = self.order[..k].to_vec();
        let sub = self.graph.induced(&kept);
        let order = (0..k).collect();
        Ok((OrderedGraph::new(sub, order, self.d, self.f)?, kept))
    }
}

fn count_edges_within(g: &Graph, set: &[usize]) -> usize {
    let mut count = 0;
    for (a, &u) in set.iter().enumerate() {
        for &v in &set[a + 1..] {
            if g.has_edge(u, v) {
                count += 1;
            }
        }
    }
    count
}

/// Smallest-last ordering: repeatedly delete a vertex of minimum remaining
/// degree (smallest id on ties); the reversed deletion sequence is the order.
///
/// The returned degeneracy is exact. The ordered graph carries
/// `d = max(degeneracy, 1)` since a declared bound must be at least 1.
pub fn degeneracy_order(g: &Graph) -> (OrderedGraph, usize) {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = g.max_degree();
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut deletion = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = *buckets[low].iter().next().expect("nonempty bucket");
        buckets[low].remove(&v);
        degeneracy = degeneracy.max(low);
        removed[v] = true;
        deletion.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                buckets[degree[u]].remove(&u);
                degree[u] -= 1;
                buckets[degree[u]].insert(u);
                low = low.min(degree[u]);
            }
        }
    }
    deletion.reverse();
    let og = OrderedGraph::new(g.clone(), deletion, degeneracy.max(1) as f64, None)
        .expect("smallest-last order witnesses its own degeneracy");
    (og, degeneracy)
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| g.neighbors(v).iter().all(|&u| u == v || !s.contains(u)))
}

/// True iff `g` contains `K_r` as a subgraph. Every clique has a last vertex
/// in a degeneracy order whose left-neighborhood contains the rest, so the
/// search only extends within left-neighborhoods.
pub fn contains_clique(g: &Graph, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    if r == 1 {
        return g.n() > 0;
    }
    let (og, degeneracy) = degeneracy_order(g);
    if degeneracy + 1 < r {
        return false;
    }
    let left = og.left_positions();
    (0..og.n()).any(|i| left[i].len() + 1 >= r && extend_clique(&og, &left[i], r - 1))
}

/// Whether the candidate positions contain a clique of size `need`.
fn extend_clique(og: &OrderedGraph, candidates: &[usize], need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if candidates.len() < need {
        return false;
    }
    let g = og.graph();
    for (a, &p) in candidates.iter().enumerate() {
        if candidates.len() - a < need {
            break;
        }
        let vp = og.vertex_at(p);
        let next: Vec<usize> = candidates[a + 1..]
            .iter()
            .copied()
            .filter(|&q| g.has_edge(vp, og.vertex_at(q)))
            .collect();
        if extend_clique(og, &next, need - 1) {
            return true;
        }
    }
    false
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let (og, degeneracy) = degeneracy_order(g);
    let left = og.left_positions();
    let mut best = 1;
    for size in 2..=degeneracy + 1 {
        if (0..og.n()).any(|i| left[i].len() + 1 >= size && extend_clique(&og, &left[i], size - 1)) {
            best = size;
        } else {
            break;
        }
    }
    best
}

/// Smallest vertex adjacent to every member of `s`, if any.
pub fn common_neighbor(g: &Graph, s: &VertexSet) -> Result<Option<usize>, GraphError> {
    let mut members = s.iter();
    let first = members.next().ok_or(GraphError::EmptySet)?;
    let mut common: Vec<usize> = g.neighbors(first).to_vec();
    for v in members {
        common.retain(|&u| g.has_edge(u, v));
        if common.is_empty() {
            break;
        }
    }
    Ok(common.first().copied())
}

/// True iff `colors` is a proper coloring of every vertex of `g`.
pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Greedy first-fit coloring along `order`.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.extend(
            g.neighbors(v)
                .iter()
                .filter(|&&u| color[u] != usize::MAX)
                .map(|&u| color[u]),
        );
        used.sort_unstable();
        used.dedup();
        let mut c = 0;
        for &x in &used {
            if x == c {
                c += 1;
            } else if x > c {
                break;
            }
        }
        color[v] = c;
    }
    color
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&complete(4)).1, 3);
        assert_eq!(degeneracy_order(&cycle(5)).1, 2);
        assert_eq!(degeneracy_order(&Graph::empty(7)).1, 0);
        assert_eq!(degeneracy_order(&Graph::empty(0)).1, 0);
        assert_eq!(degeneracy_order(&petersen()).1, 3);
    }

    #[test]
    fn degeneracy_is_optimal_on_small_graphs() {
        // brute force over all orderings of a few small graphs
        for g in [cycle(5), complete(4), star(4), path(5), grotzsch()] {
            let (og, k) = degeneracy_order(&g);
            assert_eq!(og.max_left_degree(), k);
            if g.n() <= 7 {
                let best = all_orders(g.n())
                    .into_iter()
                    .map(|o| {
                        OrderedGraph::new(g.clone(), o, g.n().max(1) as f64, None)
                            .unwrap()
                            .max_left_degree()
                    })
                    .min()
                    .unwrap();
                assert_eq!(best, k);
            }
        }
    }

    fn all_orders(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for o in all_orders(n - 1) {
            for i in 0..=o.len() {
                let mut p = o.clone();
                p.insert(i, n - 1);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn left_neighborhood_examples() {
        let k3 = complete(3);
        let og = OrderedGraph::new(k3, vec![0, 1, 2], 2.0, None).unwrap();
        assert!(og.left_neighborhood(0).unwrap().is_empty());
        assert_eq!(og.left_neighborhood(2).unwrap(), vs(&[0, 1]));
        // path a-b-c ordered (a, c, b)
        let p = path(3);
        let og = OrderedGraph::new(p, vec![0, 2, 1], 2.0, None).unwrap();
        assert_eq!(og.left_neighborhood(2).unwrap(), vs(&[0, 2]));
        assert!(matches!(
            og.left_neighborhood(3),
            Err(GraphError::PositionOutOfRange { position: 3, n: 3 })
        ));
    }

    #[test]
    fn left_edge_count_examples() {
        let og = OrderedGraph::new(complete(4), vec![2, 0, 3, 1], 3.0, None).unwrap();
        assert_eq!(og.left_edge_count(3).unwrap(), 3);
        let (og, _) = degeneracy_order(&cycle(5));
        for i in 0..5 {
            assert_eq!(og.left_edge_count(i).unwrap(), 0);
        }
        assert!(og.left_edge_count(5).is_err());
    }

    #[test]
    fn ordered_graph_validates_bounds() {
        assert!(matches!(
            OrderedGraph::new(complete(4), vec![0, 1, 2, 3], 2.0, None),
            Err(GraphError::LeftDegreeExceeded {
                position: 3,
                left_degree: 3,
                ..
            })
        ));
        assert!(matches!(
            OrderedGraph::new(complete(3), vec![0, 1, 2], 2.0, Some(5.0)),
            Err(GraphError::InvalidSparsity { .. })
        ));
        // K_4 with d = 3, f = 8: left edge budget 9/8 < 3 at the last vertex
        assert!(matches!(
            OrderedGraph::new(complete(4), vec![0, 1, 2, 3], 3.0, Some(8.0)),
            Err(GraphError::LeftEdgesExceeded {
                position: 3,
                edges: 3,
                ..
            })
        ));
        assert!(matches!(
            OrderedGraph::new(path(3), vec![0, 0, 1], 2.0, None),
            Err(GraphError::NotAPermutation(3))
        ));
        assert!(OrderedGraph::new(path(3), vec![0, 1, 2], 0.5, None).is_err());
    }

    #[test]
    fn independence_examples() {
        let p3 = path(3);
        assert!(is_independent(&p3, &VertexSet::new()));
        assert!(!is_independent(&p3, &vs(&[0, 1])));
        assert!(is_independent(&p3, &vs(&[0, 2])));
    }

    #[test]
    fn clique_examples() {
        assert!(!contains_clique(&cycle(5), 3));
        assert!(contains_clique(&complete(4), 4));
        assert!(!contains_clique(&complete(4), 5));
        assert!(!contains_clique(&petersen(), 3));
        assert!(contains_clique(&path(2), 2));
        assert!(!contains_clique(&Graph::empty(3), 2));
        assert!(contains_clique(&Graph::empty(1), 1));
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&petersen()), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn petersen_triangle_oracle() {
        // brute-force triangle enumeration
        let g = petersen();
        let mut triangles = 0;
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 0);
    }

    #[test]
    fn common_neighbor_examples() {
        let s = star(4);
        assert_eq!(common_neighbor(&s, &vs(&[1, 2, 3, 4])).unwrap(), Some(0));
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(common_neighbor(&g, &vs(&[0, 1])).unwrap(), None);
        let c5 = cycle(5);
        assert_eq!(common_neighbor(&c5, &vs(&[0, 2])).unwrap(), Some(1));
        assert_eq!(common_neighbor(&c5, &VertexSet::new()), Err(GraphError::EmptySet));
    }

    #[test]
    fn greedy_is_proper() {
        let g = petersen();
        let (og, k) = degeneracy_order(&g);
        let c = greedy_coloring(&g, og.order());
        assert!(is_proper_coloring(&g, &c));
        assert!(*c.iter().max().unwrap() <= k);
    }
}
