//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library.

#![allow(dead_code)]

use mldom_core::Graph;

pub const INF: usize = usize::MAX / 4;

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub d: Vec<Vec<usize>>,
}

impl Naive {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        let mut d = vec![vec![INF; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        Naive { n, adj, d }
    }

    pub fn of(g: &Graph) -> Self {
        Naive::new(g.n(), &g.edges())
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| (x + 1..self.n).map(move |y| (x, y)))
    }

    pub fn dominating(&self, s: &[usize]) -> bool {
        (0..self.n).all(|w| s.contains(&w) || s.iter().any(|&u| self.adj[u][w]))
    }

    pub fn resolving(&self, s: &[usize]) -> bool {
        self.pairs()
            .all(|(x, y)| s.iter().any(|&u| self.d[u][x] != self.d[u][y]))
    }

    pub fn mld(&self, s: &[usize]) -> bool {
        self.dominating(s) && self.resolving(s)
    }

    pub fn ld(&self, s: &[usize]) -> bool {
        let trace =
            |x: usize| -> Vec<usize> { s.iter().copied().filter(|&u| self.adj[u][x]).collect() };
        self.dominating(s)
            && self
                .pairs()
                .filter(|(x, y)| !s.contains(x) && !s.contains(y))
                .all(|(x, y)| trace(x) != trace(y))
    }

    pub fn doubly_resolves(&self, u: usize, v: usize, x: usize, y: usize) -> bool {
        let du = self.d[u][x] as i64 - self.d[u][y] as i64;
        let dv = self.d[v][x] as i64 - self.d[v][y] as i64;
        du != dv
    }

    pub fn doubly_resolving(&self, s: &[usize]) -> bool {
        self.pairs().all(|(x, y)| {
            s.iter()
                .any(|&u| s.iter().any(|&v| self.doubly_resolves(u, v, x, y)))
        })
    }

    /// Lexicographically least minimum set satisfying `pred`.
    pub fn minimum(&self, pred: impl Fn(&[usize]) -> bool) -> Vec<usize> {
        for k in 1..=self.n {
            if let Some(s) = combinations(self.n, k).into_iter().find(|s| pred(s)) {
                return s;
            }
        }
        panic!("no feasible set, even the whole vertex set fails");
    }

    pub fn has_cycle_of_length(&self, len: usize) -> bool {
        let mut path = Vec::with_capacity(len);
        (0..self.n).any(|start| {
            path.clear();
            path.push(start);
            self.closed_walk(&mut path, len)
        })
    }

    fn closed_walk(&self, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return self.adj[last][path[0]];
        }
        for w in 0..self.n {
            if self.adj[last][w] && !path.contains(&w) {
                path.push(w);
                let found = self.closed_walk(path, len);
                path.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    /// Shortest cycle through some edge: remove the edge and measure the
    /// remaining distance between its endpoints.
    pub fn girth(&self) -> Option<usize> {
        let mut edges = Vec::new();
        for (u, v) in self.pairs() {
            if self.adj[u][v] {
                edges.push((u, v));
            }
        }
        let mut best = None;
        for &(a, b) in &edges {
            let rest: Vec<_> = edges.iter().copied().filter(|&e| e != (a, b)).collect();
            let d = Naive::new(self.n, &rest).d[a][b];
            if d < INF {
                best = Some(best.map_or(d + 1, |g: usize| g.min(d + 1)));
            }
        }
        best
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every connected graph on `n` labeled vertices, straight from edge masks.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let naive = Naive::new(n, &edges);
            if naive.d[0].iter().any(|&x| x >= INF) {
                return None;
            }
            Some(Graph::new(n, &edges).expect("connected by the oracle"))
        })
        .collect()
}
