//! Multigraph representation and elementary metrics.
//!
//! Vertices are dense indices `0..n`. Edges are stored as an ordered list of
//! endpoint pairs `(u, v)` with `u <= v`; the position of an edge in that
//! list is its identity, referenced everywhere else as an [`EdgeId`].
//! Parallel edges are allowed. Loops survive parsing but every analysis
//! operation rejects them.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type EdgeId = usize;

/// A labeled undirected multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Multigraph {
    /// Builds a multigraph from an edge list. Endpoints are normalized to
    /// `u <= v`; list order (and with it edge identity) is preserved.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("vertex count must be at least 1"));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            list.push((a as u32, b as u32));
        }
        Ok(Multigraph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Redundancy (circuit rank) `r = m - (n - 1)`.
    pub fn redundancy(&self) -> i64 {
        self.edges.len() as i64 - (self.n as i64 - 1)
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u as usize, v as usize)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|&e| !seen.insert(e))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    /// Incident edge ids per vertex (loops appear twice).
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u as usize].push(e);
            inc[v as usize].push(e);
        }
        inc
    }

    /// Neighbor lists with multiplicity; loops contribute the vertex itself.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v as usize);
            if u != v {
                adj[v as usize].push(u as usize);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Connected components as a vertex -> component-index map.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        (next, comp)
    }

    /// BFS distances from `source` over the underlying simple graph;
    /// unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn reject_loops(&self, op: &str) -> Result<()> {
        if self.has_loops() {
            return Err(Error::input(format!("{op}: graph has loops")));
        }
        Ok(())
    }

    /// Girth of the multigraph: 1 for loops, 2 for parallel edges, otherwise
    /// the shortest cycle of the underlying simple graph; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        if self.has_loops() {
            return Some(1);
        }
        if self.has_parallel_edges() {
            return Some(2);
        }
        // BFS from every vertex; the shortest cycle through the root is seen
        // as a non-tree edge joining two reached vertices.
        let adj = self.adjacency();
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Smallest number of edges whose removal disconnects the graph;
    /// 0 for disconnected input. Parallel edges count with multiplicity.
    pub fn edge_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        // Global min cut = min over t != 0 of maxflow(0, t) with unit
        // capacity per parallel edge.
        let mut cap = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            if u != v {
                cap[u as usize][v as usize] += 1;
                cap[v as usize][u as usize] += 1;
            }
        }
        let mut best = usize::MAX;
        for t in 1..self.n {
            best = best.min(max_flow(&cap, 0, t));
        }
        best
    }

    /// Edge distance: 0 for identical edges, else 1 + the minimum vertex
    /// distance between any endpoint of `e1` and any endpoint of `e2`.
    /// Edges sharing a vertex have distance 1.
    pub fn edge_distance(&self, e1: EdgeId, e2: EdgeId) -> Result<usize> {
        if e1 >= self.edges.len() || e2 >= self.edges.len() {
            return Err(Error::input("edge id out of range"));
        }
        if e1 == e2 {
            return Ok(0);
        }
        let (a, b) = self.endpoints(e1);
        let (c, d) = self.endpoints(e2);
        let da = self.bfs_distances(a);
        let db = self.bfs_distances(b);
        let m = da[c].min(da[d]).min(db[c]).min(db[d]);
        if m == usize::MAX {
            return Err(Error::input("edges lie in different components"));
        }
        Ok(1 + m)
    }

    /// Degree-based metrics plus girth and edge connectivity.
    pub fn metrics(&self) -> GraphMetrics {
        let deg = self.degrees();
        let min_degree = deg.iter().copied().min().unwrap_or(0);
        let max_degree = deg.iter().copied().max().unwrap_or(0);
        GraphMetrics {
            girth: self.girth(),
            edge_connectivity: self.edge_connectivity(),
            min_degree,
            max_degree,
            is_k_regular: (min_degree == max_degree).then_some(min_degree),
            redundancy: self.redundancy(),
        }
    }

    /// Regularity degree, or an error naming `op` for irregular input.
    pub fn require_regular(&self, op: &str) -> Result<usize> {
        self.reject_loops(op)?;
        let deg = self.degrees();
        let k = deg[0];
        if deg.iter().any(|&d| d != k) {
            return Err(Error::input(format!("{op}: graph is not regular")));
        }
        Ok(k)
    }

    /// Guard used by the analysis operations: connected, loop-free.
    pub fn require_analyzable(&self, op: &str) -> Result<()> {
        self.reject_loops(op)?;
        if !self.is_connected() {
            return Err(Error::input(format!("{op}: graph is disconnected")));
        }
        Ok(())
    }
}

/// Derived metric bundle for a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    /// Length of the shortest cycle; `None` for acyclic graphs.
    pub girth: Option<usize>,
    pub edge_connectivity: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_k_regular: Option<usize>,
    /// `m - (n - 1)`; negative for forests on fewer edges.
    pub redundancy: i64,
}

fn max_flow(cap: &[Vec<i64>], s: usize, t: usize) -> usize {
    let n = cap.len();
    let mut residual: Vec<Vec<i64>> = cap.to_vec();
    let mut flow = 0usize;
    loop {
        // BFS augmenting path
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && residual[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut bottleneck = i64::MAX;
        let mut v = t;
        while v != s {
            let u = parent[v];
            bottleneck = bottleneck.min(residual[u][v]);
            v = u;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[u][v] -= bottleneck;
            residual[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck as usize;
    }
}

/// Cubic graph on `n` vertices (n even, n >= 14): the cycle `0-1-...-(n-1)-0`
/// plus a chord from each even vertex `i` to `(i + 5) mod n`. Bipartite by
/// vertex parity, girth exactly 6.
pub fn girth6_family(n: usize) -> Result<Multigraph> {
    if n % 2 != 0 || n < 14 {
        return Err(Error::input(format!(
            "girth6_family requires even n >= 14, got {n}"
        )));
    }
    let mut edges = Vec::with_capacity(3 * n / 2);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in (0..n).step_by(2) {
        edges.push((i, (i + 5) % n));
    }
    Multigraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph::new(n, edges).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Multigraph::new(10, edges).unwrap()
    }

    #[test]
    fn girth_basics() {
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(petersen().girth(), Some(5));
        let path = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), None);
        let parallel = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(parallel.girth(), Some(2));
        let looped = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(looped.girth(), Some(1));
    }

    #[test]
    fn girth_bfs_oracle() {
        // Independent check: shortest cycle through each vertex by explicit
        // path enumeration on small graphs.
        for g in [complete(4), cycle(6), petersen()] {
            let adj = g.adjacency();
            let n = g.vertex_count();
            let mut best = usize::MAX;
            // DFS enumeration of all simple cycles through vertex 0..n.
            fn dfs(
                adj: &[Vec<usize>],
                start: usize,
                u: usize,
                visited: &mut Vec<bool>,
                len: usize,
                best: &mut usize,
            ) {
                for &w in &adj[u] {
                    if w == start && len >= 3 {
                        *best = (*best).min(len);
                    } else if !visited[w] && w > start {
                        visited[w] = true;
                        dfs(adj, start, w, visited, len + 1, best);
                        visited[w] = false;
                    }
                }
            }
            for s in 0..n {
                let mut visited = vec![false; n];
                visited[s] = true;
                dfs(&adj, s, s, &mut visited, 1, &mut best);
            }
            assert_eq!(g.girth(), Some(best));
        }
    }

    #[test]
    fn edge_connectivity_values() {
        assert_eq!(cycle(5).edge_connectivity(), 2);
        assert_eq!(petersen().edge_connectivity(), 3);
        let tree = Multigraph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(tree.edge_connectivity(), 1);
        let disconnected = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(disconnected.edge_connectivity(), 0);
    }

    #[test]
    fn edge_connectivity_small_cut_oracle() {
        // Exhaustive: Petersen has no disconnecting set of size <= 2.
        let g = petersen();
        let m = g.edge_count();
        for e1 in 0..m {
            for e2 in e1..m {
                let keep: Vec<(usize, usize)> = (0..m)
                    .filter(|&e| e != e1 && e != e2)
                    .map(|e| g.endpoints(e))
                    .collect();
                let h = Multigraph::new(10, keep).unwrap();
                assert!(h.is_connected());
            }
        }
    }

    #[test]
    fn edge_distance_convention() {
        // Two edges sharing a vertex are at distance 1.
        let star = Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.edge_distance(0, 1).unwrap(), 1);
        assert_eq!(star.edge_distance(0, 0).unwrap(), 0);
        // Antipodal edges of C6 are at distance 3.
        let c6 = cycle(6);
        assert_eq!(c6.edge_distance(0, 3).unwrap(), 3);
        // Boundary edges of a chain of length 3 (path a-b-c-d inside a path
        // graph): first and last edge are at distance 2.
        let p4 = Multigraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_distance(0, 2).unwrap(), 2);
    }

    #[test]
    fn girth6_family_shape() {
        for n in (14..=40).step_by(2) {
            let g = girth6_family(n).unwrap();
            assert_eq!(g.edge_count(), 3 * n / 2);
            let deg = g.degrees();
            assert!(deg.iter().all(|&d| d == 3), "not cubic at n = {n}");
            assert_eq!(g.girth(), Some(6), "girth mismatch at n = {n}");
            assert!(g.is_connected());
        }
        assert!(girth6_family(13).is_err());
        assert!(girth6_family(12).is_err());
    }

    #[test]
    fn metrics_bundle() {
        let m = petersen().metrics();
        assert_eq!(m.girth, Some(5));
        assert_eq!(m.edge_connectivity, 3);
        assert_eq!(m.is_k_regular, Some(3));
        assert_eq!(m.redundancy, 6);
        assert!(m.edge_connectivity <= m.min_degree);
    }
}
