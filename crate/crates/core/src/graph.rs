//! Simple undirected connected graphs, hop distances and girth.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] is validated at
//! construction time and never mutated afterwards; derived data such as the
//! distance matrix is computed once on first use and cached.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Upper limit on the number of vertices accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("Disconnected: vertex {0} is not reachable from vertex 0")]
    Disconnected(usize),
}

/// An immutable, simple, undirected and connected graph.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    distances: OnceLock<DistanceMatrix>,
}

impl Graph {
    /// Builds and validates a graph. Duplicate edges (in either orientation)
    /// are collapsed; loops, out-of-range endpoints and disconnected inputs
    /// are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall(n));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
            edge_count += nbrs.len();
        }
        let graph = Graph {
            adj,
            edge_count: edge_count / 2,
            distances: OnceLock::new(),
        };
        if let Some(v) = graph.first_unreachable() {
            return Err(GraphError::Disconnected(v));
        }
        Ok(graph)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let dist = self.bfs(0);
        dist.iter().position(|d| d.is_none())
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    fn bfs(&self, source: usize) -> Vec<Option<u16>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All-pairs hop distances, computed by one BFS per vertex and cached.
    pub fn distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| {
            let n = self.n();
            let mut d = Vec::with_capacity(n * n);
            for s in 0..n {
                d.extend(
                    self.bfs(s)
                        .into_iter()
                        .map(|x| x.expect("graph is connected")),
                );
            }
            DistanceMatrix { n, d }
        })
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n()
    }

    pub fn degree_one_vertices(&self) -> VertexSet {
        VertexSet::from_iter_unchecked(self.n(), self.vertices().filter(|&v| self.degree(v) == 1))
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Girth {
        if self.is_tree() {
            return Girth::Acyclic;
        }
        // BFS from every root; a non-tree edge (u, w) closes a closed walk of
        // length d(u) + d(w) + 1 through the root, and the minimum over all
        // roots is the girth.
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        Girth::Finite(best as u32)
    }

    /// True iff the graph contains a 4-cycle or a 6-cycle as a (not
    /// necessarily induced) subgraph.
    pub fn has_c4_or_c6_subgraph(&self) -> bool {
        self.has_c4() || self.has_c6()
    }

    fn has_c4(&self) -> bool {
        let n = self.n();
        let mut seen = vec![usize::MAX; n];
        for u in 0..n {
            for &m in &self.adj[u] {
                for &w in &self.adj[m] {
                    if w == u {
                        continue;
                    }
                    if seen[w] == u {
                        return true;
                    }
                    seen[w] = u;
                }
            }
        }
        false
    }

    fn has_c6(&self) -> bool {
        // Each 6-cycle is found once from its minimum vertex, leaving through
        // the smaller of its two cycle-neighbors.
        let mut path = Vec::with_capacity(6);
        for start in 0..self.n() {
            path.clear();
            path.push(start);
            if self.extend_c6(start, &mut path) {
                return true;
            }
        }
        false
    }

    fn extend_c6(&self, start: usize, path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        if path.len() == 6 {
            return path[1] < last && self.is_adjacent(last, start);
        }
        for &w in &self.adj[last] {
            if w <= start || path.contains(&w) {
                continue;
            }
            path.push(w);
            if self.extend_c6(start, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Returns a copy with one extra edge. Used by generators that grow a
    /// connected graph edge by edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::new(self.n(), &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

/// All-pairs shortest-path hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u16 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Length of a shortest cycle, or `Acyclic` for trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(u32),
    Acyclic,
}

impl Girth {
    /// `girth >= k`, where a tree satisfies every bound.
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u32(*g),
            Girth::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}
