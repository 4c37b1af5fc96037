use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are kept as pairs `(u, v)` with `u < v`, sorted lexicographically;
/// that order is the edge labeling used everywhere else.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        Graph::from_edges(raw.vertex_count, &raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            vertex_count: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![vec![0; n.div_ceil(64)]; n],
        }
    }

    /// Builds a graph; duplicate pairs collapse, loops and bad endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set(u, v);
        }
        g.rebuild_edges();
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u][v / 64] |= 1 << (v % 64);
        self.adj[v][u / 64] |= 1 << (u % 64);
    }

    fn rebuild_edges(&mut self) {
        self.edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Position of `{u, v}` in the edge labeling.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.has_edge(v, w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v);
                }
            }
        }
        g.rebuild_edges();
        g
    }

    /// Side-by-side union; also returns the vertex range of each part.
    pub fn disjoint_union(parts: &[Graph]) -> (Graph, Vec<Range<usize>>) {
        let total = parts.iter().map(|g| g.n).sum();
        let mut g = Graph::empty(total);
        let mut ranges = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for part in parts {
            for &(u, v) in &part.edges {
                g.set(u + offset, v + offset);
            }
            ranges.push(offset..offset + part.n);
            offset += part.n;
        }
        g.rebuild_edges();
        (g, ranges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The graph with vertex `v` renamed `relabel[v]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (relabel[u], relabel[v])).collect();
        Graph::from_edges(self.n, &edges).expect("relabeling is a bijection")
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), &edges).unwrap()
    }

    /// Whether `images` (a vertex permutation) maps edges onto edges.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.n
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.has_edge(images[u], images[v]))
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,n}` with center 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
        Graph::from_edges(n + 1, &edges).unwrap()
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
