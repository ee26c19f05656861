//! Deterministic graph generators: the named witness families, standard
//! trees, and seeded random corpora.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::tree;

/// Largest `s` accepted by [`gen_g_s`].
pub const MAX_G_S: u32 = 4;

/// Attempts made by [`gen_random_connected`] before giving up.
pub const MAX_RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("GiveUp: no connected sample after {MAX_RETRIES} attempts (n={n}, p={p})")]
    GiveUp { n: usize, p: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn out_of_range(msg: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange(msg.into())
}

/// A graph whose vertices carry role names such as `p`, `a_3` or `c_0`.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

impl LabeledGraph {
    fn new(graph: Graph, labels: impl IntoIterator<Item = (String, usize)>) -> Self {
        let labels: BTreeMap<_, _> = labels.into_iter().collect();
        debug_assert!(labels.values().all(|&v| v < graph.n()));
        LabeledGraph { graph, labels }
    }

    fn unlabeled(graph: Graph) -> Self {
        LabeledGraph {
            graph,
            labels: BTreeMap::new(),
        }
    }

    /// Index of a named vertex. Panics if the name is unknown.
    pub fn vertex(&self, name: &str) -> usize {
        *self
            .labels
            .get(name)
            .unwrap_or_else(|| panic!("no vertex labeled {name}"))
    }

    pub fn vertices(&self, names: &[&str]) -> Vec<usize> {
        names.iter().map(|n| self.vertex(n)).collect()
    }

    /// Name → index inverted to index → name.
    pub fn names_by_vertex(&self) -> BTreeMap<usize, String> {
        self.labels.iter().map(|(k, &v)| (v, k.clone())).collect()
    }
}

/// Layout of `G_s`: `p = 0`, `a_i = 1 + i`, `b_i = 1 + 2^(s+1) + i`,
/// `c_j = 1 + 2^(s+2) + j`.
#[derive(Debug, Clone, Copy)]
pub struct GsLayout {
    pub s: u32,
}

impl GsLayout {
    pub fn half(self) -> usize {
        1 << (self.s + 1)
    }
    pub fn n(self) -> usize {
        2 * self.half() + self.s as usize + 2
    }
    pub fn p(self) -> usize {
        0
    }
    pub fn a(self, i: usize) -> usize {
        1 + i
    }
    pub fn b(self, i: usize) -> usize {
        1 + self.half() + i
    }
    pub fn c(self, j: usize) -> usize {
        1 + 2 * self.half() + j
    }
}

/// The graph `G_s`: hub `p` joined to every `a_i`, each `a_i` joined to
/// `b_i`, and `b_i` joined to `c_j` whenever bit `j` of `i` is set
/// (`0 <= i < 2^(s+1)`, `0 <= j <= s`).
pub fn gen_g_s(s: u32) -> Result<LabeledGraph, FamilyError> {
    if !(1..=MAX_G_S).contains(&s) {
        return Err(out_of_range(format!("s must be in 1..={MAX_G_S}, got {s}")));
    }
    let lay = GsLayout { s };
    let mut edges = Vec::new();
    for i in 0..lay.half() {
        edges.push((lay.p(), lay.a(i)));
        edges.push((lay.a(i), lay.b(i)));
        for j in 0..=s as usize {
            if i >> j & 1 == 1 {
                edges.push((lay.b(i), lay.c(j)));
            }
        }
    }
    let graph = Graph::new(lay.n(), &edges)?;
    let mut labels = vec![("p".to_string(), lay.p())];
    for i in 0..lay.half() {
        labels.push((format!("a_{i}"), lay.a(i)));
        labels.push((format!("b_{i}"), lay.b(i)));
    }
    for j in 0..=s as usize {
        labels.push((format!("c_{j}"), lay.c(j)));
    }
    Ok(LabeledGraph::new(graph, labels))
}

/// The comb `H'_t`: path `a_1 - ... - a_t` with a pendant `b_i` on each
/// `a_i`. Layout: `a_i = i - 1`, `b_i = t + i - 1`.
pub fn gen_comb(t: usize) -> Result<LabeledGraph, FamilyError> {
    if t < 1 {
        return Err(out_of_range("comb needs t >= 1"));
    }
    let mut edges: Vec<_> = (1..t).map(|i| (i - 1, i)).collect();
    edges.extend((0..t).map(|i| (i, t + i)));
    let graph = Graph::new(2 * t, &edges)?;
    let labels = (1..=t).flat_map(|i| [(format!("a_{i}"), i - 1), (format!("b_{i}"), t + i - 1)]);
    Ok(LabeledGraph::new(graph, labels))
}

pub fn gen_path(n: usize) -> Result<LabeledGraph, FamilyError> {
    if n < 2 {
        return Err(out_of_range("path needs n >= 2"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(LabeledGraph::unlabeled(Graph::new(n, &edges)?))
}

pub fn gen_cycle(n: usize) -> Result<LabeledGraph, FamilyError> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(LabeledGraph::unlabeled(Graph::new(n, &edges)?))
}

/// `K_{1,k}` with center 0.
pub fn gen_star(k: usize) -> Result<LabeledGraph, FamilyError> {
    if k < 1 {
        return Err(out_of_range("star needs k >= 1"));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    let graph = Graph::new(k + 1, &edges)?;
    Ok(LabeledGraph::new(graph, [("center".to_string(), 0)]))
}

/// Center 0 with `legs` paths of `leglen` vertices each; leg `i` occupies
/// `1 + i*leglen ..= (i+1)*leglen`, tip last.
pub fn gen_spider(legs: usize, leglen: usize) -> Result<LabeledGraph, FamilyError> {
    if legs < 1 || leglen < 1 {
        return Err(out_of_range("spider needs legs >= 1 and leglen >= 1"));
    }
    let mut edges = Vec::new();
    for leg in 0..legs {
        let first = 1 + leg * leglen;
        edges.push((0, first));
        for k in 1..leglen {
            edges.push((first + k - 1, first + k));
        }
    }
    let graph = Graph::new(1 + legs * leglen, &edges)?;
    Ok(LabeledGraph::new(graph, [("center".to_string(), 0)]))
}

/// Two adjacent centers `0` and `1` carrying `left` and `right` leaves.
pub fn gen_double_star(left: usize, right: usize) -> Result<LabeledGraph, FamilyError> {
    let mut edges = vec![(0, 1)];
    edges.extend((0..left).map(|i| (0, 2 + i)));
    edges.extend((0..right).map(|i| (1, 2 + left + i)));
    let graph = Graph::new(2 + left + right, &edges)?;
    Ok(LabeledGraph::new(
        graph,
        [("u".to_string(), 0), ("v".to_string(), 1)],
    ))
}

pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    tree::random_tree(n, seed).map_err(|e| out_of_range(e.to_string()))
}

/// Erdős–Rényi samples, redrawn until connected.
pub fn gen_random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(out_of_range("random graph needs n >= 2"));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(out_of_range(format!(
            "edge probability must be in (0, 1], got {edge_prob}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((u, v));
                }
            }
        }
        match Graph::new(n, &edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(FamilyError::GiveUp { n, p: edge_prob })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    /// No 4-cycle or 6-cycle subgraph.
    C4C6Free,
    /// Girth at least 5.
    Girth5,
}

/// A random spanning tree grown by random extra edges that keep the
/// constraint, until `target_edges` is reached or no candidate remains.
pub fn gen_random_constrained(
    n: usize,
    target_edges: usize,
    constraint: Constraint,
    seed: u64,
) -> Result<Graph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = tree::random_tree(n, rng.gen()).map_err(|e| out_of_range(e.to_string()))?;
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.is_adjacent(u, v))
        .collect();
    candidates.shuffle(&mut rng);
    for (u, v) in candidates {
        if g.edge_count() >= target_edges {
            break;
        }
        let keeps = match constraint {
            // the new edge closes cycles of length d(u,v) + 1 and longer
            Constraint::Girth5 => g.distances().get(u, v) >= 4,
            Constraint::C4C6Free => !g.with_edge(u, v)?.has_c4_or_c6_subgraph(),
        };
        if keeps {
            g = g.with_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Every connected labeled graph on `n` vertices (`2 <= n <= 7`), in order
/// of the edge-subset bitmask over lexicographically ordered vertex pairs.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(2..=7).contains(&n) {
        return Err(out_of_range(format!(
            "exhaustive enumeration supports 2 <= n <= 7, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut edges = Vec::with_capacity(pairs.len());
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        edges.clear();
        edges.extend(
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        );
        if let Ok(g) = Graph::new(n, &edges) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn g1_layout() {
        let g = gen_g_s(1).unwrap();
        assert_eq!(g.graph.n(), 11);
        assert_eq!(g.graph.degree(g.vertex("p")), 4);
        let b3 = g.vertex("b_3");
        assert!(g.graph.is_adjacent(b3, g.vertex("c_0")));
        assert!(g.graph.is_adjacent(b3, g.vertex("c_1")));
        assert_eq!(g.graph.neighbors(g.vertex("b_0")), &[g.vertex("a_0")]);
        // 4 hub edges, 4 matching edges, popcounts 0+1+1+2
        assert_eq!(g.graph.edge_count(), 12);
        assert!(!g.graph.is_tree());
        assert_eq!(g.graph.distances().get(g.vertex("c_0"), g.vertex("p")), 3);
        assert_eq!(g.labels.len(), 11);
    }

    #[test]
    fn g_s_sizes() {
        assert_eq!(gen_g_s(2).unwrap().graph.n(), 20);
        assert_eq!(gen_g_s(4).unwrap().graph.n(), 70);
        assert!(gen_g_s(0).is_err());
        assert!(gen_g_s(5).is_err());
    }

    #[test]
    fn combs() {
        assert_eq!(gen_comb(1).unwrap().graph, gen_path(2).unwrap().graph);
        let c = gen_comb(2).unwrap();
        let leaves = c.graph.degree_one_vertices().to_vec();
        assert_eq!(leaves, c.vertices(&["b_1", "b_2"]));
        assert_eq!(gen_comb(3).unwrap().graph.girth(), Girth::Acyclic);
        assert!(gen_comb(0).is_err());
    }

    #[test]
    fn small_trees() {
        assert_eq!(gen_path(2).unwrap().graph.n(), 2);
        assert_eq!(gen_star(3).unwrap().graph.n(), 4);
        let s = gen_spider(3, 2).unwrap().graph;
        assert_eq!(s.n(), 7);
        assert!(s.is_tree());
        let d = gen_double_star(2, 2).unwrap().graph;
        assert_eq!((d.n(), d.edge_count()), (6, 5));
    }

    #[test]
    fn random_connected() {
        assert_eq!(
            gen_random_connected(2, 1.0, 0).unwrap(),
            gen_path(2).unwrap().graph
        );
        assert_eq!(
            gen_random_connected(8, 0.3, 5).unwrap(),
            gen_random_connected(8, 0.3, 5).unwrap()
        );
        assert_eq!(gen_random_connected(9, 0.25, 11).unwrap().n(), 9);
        assert!(gen_random_connected(5, 0.0, 1).is_err());
    }

    #[test]
    fn constrained() {
        for seed in 0..20 {
            let g = gen_random_constrained(10, 14, Constraint::Girth5, seed).unwrap();
            assert!(g.girth().at_least(5));
            let g = gen_random_constrained(10, 14, Constraint::C4C6Free, seed).unwrap();
            assert!(!g.has_c4_or_c6_subgraph());
        }
        assert_eq!(
            gen_random_constrained(10, 12, Constraint::Girth5, 3).unwrap(),
            gen_random_constrained(10, 12, Constraint::Girth5, 3).unwrap()
        );
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001187: 1, 4, 38, 728
        let counts: Vec<usize> = (2..=5)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 38, 728]);
    }
}
