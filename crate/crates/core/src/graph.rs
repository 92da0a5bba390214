//! Simple undirected graphs plus the two vertex partitions the coloring
//! routines care about: bipartitions and split decompositions.
//!
//! Vertices are `0..n`. Edges are unordered pairs, stored in insertion order
//! and addressed by index; colorings elsewhere in the crate are keyed by that
//! edge index. Loops and parallel edges are rejected at construction.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An undirected simple graph with indexed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Endpoints may come in either order; each edge is stored with its
    /// smaller endpoint first, at its position in the input list. Fails on
    /// out-of-range endpoints, self-loops, and repeated vertex pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        let mut seen = normalized.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: normalized, adj })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in index order, smaller endpoint first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, smaller vertex first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree, 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbors of `v` as `(neighbor, edge index)`, ascending by neighbor.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().copied()
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|pos| list[pos].1)
    }

    /// `Some(r)` when every vertex has degree `r`. The empty graph counts
    /// as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map(Vec::len).unwrap_or(0);
        if self.adj.iter().all(|l| l.len() == r) {
            Some(r)
        } else {
            None
        }
    }

    /// The complete graph on `n` vertices. Edge order is lexicographic:
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ... as in [`complete_edge_index`].
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).expect("complete graph edge list is valid")
    }

    /// The cycle on `n >= 3` vertices, edges (0,1), (1,2), ..., (n-1,0).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edge list is valid")
    }

    /// The Petersen graph: outer 5-cycle 0..5, spokes to 5..10, inner
    /// pentagram. 3-regular on 10 vertices and 15 edges.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
        }
        for i in 0..5 {
            edges.push((i, i + 5));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("Petersen edge list is valid")
    }
}

/// Position of edge `(i, j)`, `i < j`, in the lexicographic edge order used
/// by [`Graph::complete`].
pub fn complete_edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The two sides of a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    W,
}

impl Side {
    /// The opposite side.
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }
}

/// A validated two-sided vertex partition: every edge of the graph it was
/// built against crosses between sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    /// Validates a side assignment against `g`: one entry per vertex, and no
    /// edge inside a side.
    pub fn new(g: &Graph, sides: Vec<Side>) -> Result<Self> {
        if sides.len() != g.vertex_count() {
            return Err(Error::PartitionSizeMismatch {
                expected: g.vertex_count(),
                got: sides.len(),
            });
        }
        for &(u, v) in g.edges() {
            if sides[u] == sides[v] {
                return Err(Error::EdgeInsidePart { u, v });
            }
        }
        Ok(Bipartition { sides })
    }

    /// Side of vertex `v`.
    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    /// Side of every vertex, indexed by vertex.
    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Vertices on side `s`, ascending.
    pub fn vertices_on(&self, s: Side) -> impl Iterator<Item = usize> + '_ {
        self.sides
            .iter()
            .enumerate()
            .filter(move |&(_, &t)| t == s)
            .map(|(v, _)| v)
    }
}

/// A validated split decomposition: `clique` induces a complete subgraph,
/// `independent` induces an edgeless one, and together they cover every
/// vertex exactly once.
///
/// The order of `clique` matters: constructions that leave one color off
/// each clique vertex key the pattern to positions in this list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    clique: Vec<usize>,
    independent: Vec<usize>,
    in_clique: Vec<bool>,
}

impl SplitDecomposition {
    /// Validates a declared decomposition against `g`. Recognition is not
    /// attempted; callers must say which vertices form the clique.
    pub fn new(g: &Graph, clique: Vec<usize>, independent: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        let mut count = vec![0u8; n];
        for &v in clique.iter().chain(independent.iter()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            count[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| count[v] != 1) {
            return Err(Error::NotAPartition { vertex: v });
        }
        for (pos, &u) in clique.iter().enumerate() {
            for &v in &clique[pos + 1..] {
                if g.edge_between(u, v).is_none() {
                    return Err(Error::MissingCliqueEdge { u, v });
                }
            }
        }
        let mut in_clique = vec![false; n];
        for &v in &clique {
            in_clique[v] = true;
        }
        for &(u, v) in g.edges() {
            if !in_clique[u] && !in_clique[v] {
                return Err(Error::EdgeInsideIndependentSet { u, v });
            }
        }
        Ok(SplitDecomposition { clique, independent, in_clique })
    }

    /// Clique vertices in their declared order.
    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    /// Independent-set vertices in their declared order.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    /// Whether vertex `v` belongs to the clique.
    pub fn is_clique_vertex(&self, v: usize) -> bool {
        self.in_clique[v]
    }

    /// Largest degree in `g` over the independent set, 0 when it is empty.
    pub fn max_independent_degree(&self, g: &Graph) -> usize {
        self.independent.iter().map(|&v| g.degree(v)).max().unwrap_or(0)
    }
}
