//! Simple undirected graphs with sorted adjacency.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Vertices are dense 0-based indices.
pub type VertexId = usize;

/// A finite simple undirected graph. Immutable once built; every derived graph
/// is a fresh value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ends.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u} {v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("parallel edge at {v}")));
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Like [`Graph::from_edges`] but silently drops loops and duplicates.
    pub fn from_edges_simplified(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v && u < n && v < n {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    fn from_adjacency(mut adj: Vec<Vec<VertexId>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Vertices at distance one or two from `v`, sorted.
    pub fn square_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::with_capacity(16);
        for &u in &self.adj[v] {
            out.push(u);
            for &w in &self.adj[u] {
                if w != v {
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `G²`: same vertex set, `uv` an edge iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        Graph::from_adjacency(self.vertices().map(|v| self.square_neighbors(v)).collect())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            let mut touched = vec![root];
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                        if len == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            for v in touched {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            if best == Some(3) {
                break;
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `keep` (any order); returns the graph and the
    /// new→old id map (ascending old ids).
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut old_ids: Vec<VertexId> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old_ids
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), old_ids)
    }

    /// Removes `gone`; returns the new graph and the old→new map.
    pub fn delete_vertices(&self, gone: &[VertexId]) -> (Graph, Vec<Option<VertexId>>) {
        let mut dead = vec![false; self.vertex_count()];
        for &v in gone {
            dead[v] = true;
        }
        let keep: Vec<VertexId> = self.vertices().filter(|&v| !dead[v]).collect();
        let (g, old_ids) = self.induced(&keep);
        let mut map = vec![None; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            map[v] = Some(i);
        }
        (g, map)
    }

    /// Replaces edge `uv` by a path `u w v` through a new vertex `w = n`.
    pub fn subdivide(&self, u: VertexId, v: VertexId) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let w = self.vertex_count();
        let mut adj = self.adj.clone();
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut adj[a];
            let pos = list.binary_search(&b).expect("edge present");
            list[pos] = w;
        }
        adj.push(vec![u, v]);
        Graph::from_adjacency(adj)
    }

    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Graph {
        if u == v || self.has_edge(u, v) {
            return self.clone();
        }
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        Graph::from_adjacency(adj)
    }

    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        Graph::from_adjacency(adj)
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Named small graphs used throughout tests and examples.
pub mod families {
    use super::{Graph, VertexId};

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Attaches a new pendant vertex to each listed vertex.
    pub fn with_pendants(g: &Graph, at: &[VertexId]) -> Graph {
        let mut edges: Vec<_> = g.edges().collect();
        let mut n = g.vertex_count();
        for &v in at {
            edges.push((v, n));
            n += 1;
        }
        Graph::from_edges(n, &edges).unwrap()
    }
}
