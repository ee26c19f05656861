//! Tree structure, closed formulas for trees, and the two tree
//! characterizations (when `γ_M = dim + γ` and when `γ_M = ℓ`).
//!
//! Terminology: a *leaf* has degree 1, a *support* vertex is adjacent to a
//! leaf, and a *strong support* is adjacent to at least two leaves. A
//! *major* vertex has degree at least 3. A leaf is a *terminal vertex* of the
//! major vertex closest to it; majors with at least one terminal vertex are
//! *exterior* majors, and `ter(u)` counts the terminal vertices of `u`.
//!
//! In `P_2` both vertices are leaves and both are supports; that is the only
//! tree where the two sets intersect.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("NotATree: graph has {n} vertices and {m} edges")]
    NotATree { n: usize, m: usize },
    #[error("IsAPath: the characterization only applies to trees that are not paths")]
    IsAPath,
    #[error("IsP2: the characterization does not apply to P_2")]
    IsP2,
    #[error("tree needs at least 2 vertices, got {0}")]
    TooSmall(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeProfile {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
    /// Number of leaves adjacent to a strong support.
    pub ell_prime: usize,
    pub majors: VertexSet,
    pub exterior_majors: VertexSet,
    /// Terminal vertices (sorted) of each exterior major.
    pub terminals: BTreeMap<usize, Vec<usize>>,
    pub is_path: bool,
}

impl TreeProfile {
    pub fn ell(&self) -> usize {
        self.leaves.len()
    }

    pub fn ter(&self, u: usize) -> usize {
        self.terminals.get(&u).map_or(0, Vec::len)
    }
}

fn require_tree(t: &Graph) -> Result<(), TreeError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(TreeError::NotATree {
            n: t.n(),
            m: t.edge_count(),
        })
    }
}

pub fn profile(t: &Graph) -> Result<TreeProfile, TreeError> {
    require_tree(t)?;
    let n = t.n();
    let leaves = t.degree_one_vertices();
    let mut supports = VertexSet::empty(n);
    let mut strong_supports = VertexSet::empty(n);
    let mut ell_prime = 0;
    for u in t.vertices() {
        let adjacent_leaves = t
            .neighbors(u)
            .iter()
            .filter(|&&w| leaves.contains(w))
            .count();
        if adjacent_leaves >= 1 {
            supports.insert(u);
        }
        if adjacent_leaves >= 2 {
            strong_supports.insert(u);
            ell_prime += adjacent_leaves;
        }
    }
    let majors = VertexSet::from_iter_unchecked(n, t.vertices().filter(|&v| t.degree(v) >= 3));
    let mut terminals: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    if !majors.is_empty() {
        for leaf in leaves.iter() {
            // walk inward along degree-2 vertices to the first major
            let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
            while t.degree(cur) == 2 {
                let next = t
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .unwrap();
                (prev, cur) = (cur, next);
            }
            terminals.entry(cur).or_default().push(leaf);
        }
    }
    let exterior_majors = VertexSet::from_iter_unchecked(n, terminals.keys().copied());
    Ok(TreeProfile {
        leaves,
        supports,
        strong_supports,
        ell_prime,
        is_path: majors.is_empty(),
        majors,
        exterior_majors,
        terminals,
    })
}

/// Domination number of a tree by dynamic programming over a rooted
/// traversal.
pub fn gamma_tree(t: &Graph) -> Result<usize, TreeError> {
    require_tree(t)?;
    const INF: usize = usize::MAX / 4;
    let n = t.n();
    let (order, parent) = rooted_order(t, 0);
    // in_set: v in S; covered: v not in S but dominated by a child;
    // open: v not in S and not yet dominated (its parent must join S).
    let mut in_set = vec![1usize; n];
    let mut covered = vec![INF; n];
    let mut open = vec![0usize; n];
    for &v in order.iter().rev() {
        let children = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&c| Some(c) != parent[v]);
        let mut base = 0;
        let mut cheapest_switch = INF;
        let mut any_child = false;
        for c in children {
            any_child = true;
            in_set[v] += in_set[c].min(covered[c]).min(open[c]);
            let best = in_set[c].min(covered[c]);
            base += best;
            cheapest_switch = cheapest_switch.min(in_set[c] - best);
            open[v] = open[v].saturating_add(covered[c]).min(INF);
        }
        if any_child {
            covered[v] = base + cheapest_switch;
        }
    }
    Ok(in_set[0].min(covered[0]))
}

/// BFS order from `root` and parent pointers.
fn rooted_order(t: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; t.n()];
    let mut seen = vec![false; t.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                order.push(w);
            }
        }
        i += 1;
    }
    (order, parent)
}

/// `γ_M(T) = γ(T) + ℓ'(T) - |S'(T)|`.
pub fn gamma_m_tree(t: &Graph) -> Result<usize, TreeError> {
    let p = profile(t)?;
    Ok(gamma_tree(t)? + p.ell_prime - p.strong_supports.len())
}

/// Metric dimension of a tree with its canonical minimum resolving set:
/// one endpoint for a path, otherwise all terminal vertices of each exterior
/// major except the smallest.
pub fn dim_tree(t: &Graph) -> Result<(usize, VertexSet), TreeError> {
    let p = profile(t)?;
    let mut witness = VertexSet::empty(t.n());
    if p.is_path {
        witness.insert(p.leaves.iter().next().unwrap());
        return Ok((1, witness));
    }
    for terms in p.terminals.values() {
        for &x in &terms[1..] {
            witness.insert(x);
        }
    }
    Ok((witness.len(), witness))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationVerdict {
    pub statement_flags: Vec<bool>,
    pub all_equal: bool,
}

impl CharacterizationVerdict {
    fn new(statement_flags: Vec<bool>) -> Self {
        let all_equal = statement_flags.windows(2).all(|w| w[0] == w[1]);
        CharacterizationVerdict {
            statement_flags,
            all_equal,
        }
    }
}

/// Four statements about a non-path tree, which should agree:
///
/// 1. `γ_M(T) = dim(T) + γ(T)`;
/// 2. `dim(T) = ℓ'(T) - |S'(T)|`;
/// 3. every exterior major with `ter(u) >= 2` is adjacent to all its terminal
///    vertices;
/// 4. every path between two leaves at distance greater than 2 passes
///    through at least two major vertices.
pub fn characterize_mld_dim_gamma(t: &Graph) -> Result<CharacterizationVerdict, TreeError> {
    let p = profile(t)?;
    if p.is_path {
        return Err(TreeError::IsAPath);
    }
    let gamma = gamma_tree(t)?;
    let gamma_m = gamma + p.ell_prime - p.strong_supports.len();
    let (dim, _) = dim_tree(t)?;
    let first = gamma_m == dim + gamma;
    let second = dim + p.strong_supports.len() == p.ell_prime;
    let third = p
        .terminals
        .iter()
        .filter(|(_, terms)| terms.len() >= 2)
        .all(|(&u, terms)| terms.iter().all(|&x| t.is_adjacent(u, x)));
    let fourth = leaf_paths_have_two_majors(t, &p);
    Ok(CharacterizationVerdict::new(vec![
        first, second, third, fourth,
    ]))
}

fn leaf_paths_have_two_majors(t: &Graph, p: &TreeProfile) -> bool {
    let d = t.distances();
    let leaves = p.leaves.to_vec();
    for (i, &x) in leaves.iter().enumerate() {
        let (_, parent) = rooted_order(t, x);
        for &y in &leaves[i + 1..] {
            if d.get(x, y) <= 2 {
                continue;
            }
            let mut majors_on_path = 0;
            let mut v = y;
            while let Some(up) = parent[v] {
                if p.majors.contains(up) {
                    majors_on_path += 1;
                }
                v = up;
            }
            if majors_on_path < 2 {
                return false;
            }
        }
    }
    true
}

/// Three statements about a tree other than `P_2`, which should agree:
///
/// 1. `γ_M(T) = ℓ(T)`;
/// 2. `γ(T) = |S(T)|`;
/// 3. every vertex is within distance 2 of a leaf.
pub fn characterize_mld_leaves(t: &Graph) -> Result<CharacterizationVerdict, TreeError> {
    let p = profile(t)?;
    if t.n() == 2 {
        return Err(TreeError::IsP2);
    }
    let gamma = gamma_tree(t)?;
    let gamma_m = gamma + p.ell_prime - p.strong_supports.len();
    let d = t.distances();
    let first = gamma_m == p.ell();
    let second = gamma == p.supports.len();
    let third = t
        .vertices()
        .all(|u| p.leaves.iter().any(|x| d.get(u, x) <= 2));
    Ok(CharacterizationVerdict::new(vec![first, second, third]))
}

/// Uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence. Deterministic for a given seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, TreeError> {
    if n < 2 {
        return Err(TreeError::TooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let edges = decode_prufer(n, &code);
    Ok(Graph::new(n, &edges).expect("Prüfer decoding yields a tree"))
}

/// Edges of the labeled tree with the given Prüfer sequence.
pub fn decode_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let u = leaves.pop_first().unwrap();
    let v = leaves.pop_first().unwrap();
    edges.push((u, v));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        graph(k + 1, &edges)
    }

    /// Center 0, legs 0-1-2, 0-3-4, 0-5-6.
    fn spider3x2() -> Graph {
        graph(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    }

    /// Centers 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
    fn double_star() -> Graph {
        graph(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    }

    #[test]
    fn spider_profile() {
        let p = profile(&spider3x2()).unwrap();
        assert_eq!(p.majors.to_vec(), vec![0]);
        assert_eq!(p.exterior_majors.to_vec(), vec![0]);
        assert_eq!(p.ter(0), 3);
        assert_eq!(p.supports.to_vec(), vec![1, 3, 5]);
        assert!(p.strong_supports.is_empty());
        assert!(!p.is_path);
    }

    #[test]
    fn star_and_path_profiles() {
        let p = profile(&star(4)).unwrap();
        assert_eq!(p.supports.to_vec(), vec![0]);
        assert_eq!(p.strong_supports.to_vec(), vec![0]);
        assert_eq!(p.ell_prime, 4);
        assert_eq!(p.exterior_majors.to_vec(), vec![0]);
        assert_eq!(p.ter(0), 4);

        let p = profile(&path(7)).unwrap();
        assert!(p.majors.is_empty());
        assert!(p.is_path);

        let p = profile(&path(2)).unwrap();
        assert_eq!(p.leaves.to_vec(), vec![0, 1]);
        assert_eq!(p.supports.to_vec(), vec![0, 1]);
        assert!(p.strong_supports.is_empty());
    }

    #[test]
    fn rejects_non_trees() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(
            profile(&c5).unwrap_err(),
            TreeError::NotATree { n: 5, m: 5 }
        );
        assert!(gamma_tree(&c5).is_err());
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(gamma_tree(&path(6)).unwrap(), 2);
        assert_eq!(gamma_tree(&path(2)).unwrap(), 1);
        assert_eq!(gamma_tree(&path(7)).unwrap(), 3);
        assert_eq!(gamma_tree(&star(4)).unwrap(), 1);
        assert_eq!(gamma_tree(&spider3x2()).unwrap(), 3);
        assert_eq!(gamma_tree(&double_star()).unwrap(), 2);
    }

    #[test]
    fn mld_formula() {
        assert_eq!(gamma_m_tree(&star(3)).unwrap(), 3);
        assert_eq!(gamma_m_tree(&path(6)).unwrap(), 2);
        assert_eq!(gamma_m_tree(&double_star()).unwrap(), 4);
    }

    #[test]
    fn dimension() {
        assert_eq!(dim_tree(&path(9)).unwrap().0, 1);
        let (d, w) = dim_tree(&star(4)).unwrap();
        assert_eq!((d, w.to_vec()), (3, vec![2, 3, 4]));
        let (d, w) = dim_tree(&spider3x2()).unwrap();
        assert_eq!((d, w.to_vec()), (2, vec![4, 6]));
    }

    #[test]
    fn mld_dim_gamma_characterization() {
        let v = characterize_mld_dim_gamma(&double_star()).unwrap();
        assert_eq!(v.statement_flags, vec![true; 4]);
        let v = characterize_mld_dim_gamma(&spider3x2()).unwrap();
        assert_eq!(v.statement_flags, vec![false; 4]);
        assert!(v.all_equal);
        assert_eq!(
            characterize_mld_dim_gamma(&path(5)).unwrap_err(),
            TreeError::IsAPath
        );
    }

    #[test]
    fn mld_leaves_characterization() {
        assert_eq!(
            characterize_mld_leaves(&star(3)).unwrap().statement_flags,
            vec![true; 3]
        );
        assert_eq!(
            characterize_mld_leaves(&path(7)).unwrap().statement_flags,
            vec![false; 3]
        );
        assert_eq!(
            characterize_mld_leaves(&path(2)).unwrap_err(),
            TreeError::IsP2
        );
    }

    #[test]
    fn random_trees() {
        assert_eq!(random_tree(2, 99).unwrap(), path(2));
        let t = random_tree(3, 5).unwrap();
        assert!(t.is_tree() && t.max_degree() == 2);
        assert_eq!(random_tree(8, 1).unwrap(), random_tree(8, 1).unwrap());
        assert_eq!(random_tree(1, 0).unwrap_err(), TreeError::TooSmall(1));
    }

    #[test]
    fn prufer_known_sequence() {
        // classic example: code [3,3,3,4] on 6 vertices
        let mut e = decode_prufer(6, &[3, 3, 3, 4]);
        e.sort();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }
}
