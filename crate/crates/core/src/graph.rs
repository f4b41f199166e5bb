//! Immutable simple undirected graphs on vertices `0..n`.

use thiserror::Error;

use crate::bits::{self, BitIter};

/// Largest supported vertex count. One machine word per adjacency row keeps
/// every set operation branch-free, and everything in this crate is meant
/// for desk-scale exact search anyway.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph and path construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph has no vertices")]
    EmptyVertexSet,
    #[error("path has no vertices")]
    EmptyPath,
    #[error("vertex {0} repeated in path")]
    RepeatedVertex(usize),
    #[error("consecutive path vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// An immutable simple undirected graph.
///
/// Vertices are `0..n` with `n <= 64`. Adjacency is stored both as a sorted
/// edge list and as one bitmask row per vertex; the two views are built once
/// at construction and never change.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints, and
    /// duplicate edges (`(u,v)` and `(v,u)` count as duplicates).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::new`] but silently collapses duplicate edges.
    pub fn new_collapsing(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], collapse: bool) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        let mut sorted = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u] & (1u64 << v) != 0 {
                if collapse {
                    continue;
                }
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        Ok(Graph {
            n,
            edges: sorted,
            adj,
        })
    }

    /// Builds directly from adjacency rows. Internal shortcut for derived
    /// graphs (complements, deletions, generator output); rows must already
    /// be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] & (1u64 << u), 0, "loop at {u}");
            for v in BitIter(adj[u] & !bits::full_mask(u + 1)) {
                debug_assert_ne!(adj[v] & (1u64 << u), 0, "asymmetric row {u}-{v}");
                edges.push((u, v));
            }
        }
        Graph { n, edges, adj }
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![0; n],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let full = bits::full_mask(n);
        Graph::from_adjacency((0..n).map(|v| full & !(1u64 << v)).collect())
    }

    /// Path graph `0-1-…-(n-1)`.
    pub fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path graph edges are valid")
    }

    /// Cycle graph on `n >= 3` vertices.
    pub fn cycle_graph(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle graph edges are valid")
    }

    /// Star `K_{1,k}` with center `0` and leaves `1..=k`.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::new(k + 1, &edges).expect("star edges are valid")
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The sorted edge list, each pair as `(min, max)`.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// True if the graph has at least one edge.
    #[inline]
    pub fn has_any_edge(&self) -> bool {
        !self.edges.is_empty()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge query out of range");
        self.adj[u] & (1u64 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v`, ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        bits::full_mask(self.n)
    }

    /// Maximum degree; 0 for an edgeless graph.
    pub fn max_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        Ok((0..self.n).map(|v| self.degree(v)).max().unwrap())
    }

    /// All vertices attaining the maximum degree, ascending.
    pub fn max_degree_vertices(&self) -> Result<Vec<usize>, GraphError> {
        let delta = self.max_degree()?;
        Ok((0..self.n).filter(|&v| self.degree(v) == delta).collect())
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph::from_adjacency(
            (0..self.n)
                .map(|v| full & !self.adj[v] & !(1u64 << v))
                .collect(),
        )
    }

    /// Removes vertex `v`, relabeling the remaining vertices
    /// order-preservingly. Returns the smaller graph together with the map
    /// `old_id[new] = old`.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let old_ids: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let low = bits::full_mask(v);
        let relabel = |row: u64| -> u64 {
            // drop bit v, shift the bits above it down by one
            (row & low) | ((row >> (v + 1)) << v)
        };
        let adj = old_ids.iter().map(|&u| relabel(self.adj[u])).collect();
        Ok((Graph::from_adjacency(adj), old_ids))
    }

    /// Vertices reachable from the set `from` without leaving `allowed`
    /// (both masks; `from` must be a subset of `allowed`).
    pub fn reachable_within(&self, from: u64, allowed: u64) -> u64 {
        debug_assert_eq!(from & !allowed, 0);
        let mut seen = from;
        let mut frontier = from;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reachable_within(1u64 << v, remaining);
            out.push(bits::to_vec(comp));
            remaining &= !comp;
        }
        out
    }

    /// True when the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reachable_within(1, self.vertex_mask()) == self.vertex_mask()
    }

    /// True if the subgraph induced on `mask` contains an edge.
    pub fn induced_has_edge(&self, mask: u64) -> bool {
        BitIter(mask).any(|v| self.adj[v] & mask != 0)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_p4() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_loops() {
        assert_eq!(
            Graph::new(3, &[(0, 0)]).unwrap_err(),
            GraphError::LoopEdge(0)
        );
    }

    #[test]
    fn rejects_duplicates_in_strict_mode() {
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        let g = Graph::new_collapsing(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 2, n: 2 }
        );
        assert_eq!(
            Graph::new(65, &[]).unwrap_err(),
            GraphError::TooManyVertices(65)
        );
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (3, 4), (1, 2)]).unwrap();
        let sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.size());
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        assert_eq!(Graph::complete(3).complement(), Graph::edgeless(3));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle_graph(5);
        let co = c5.complement();
        // same degree sequence and size; explicit pair enumeration
        assert_eq!(co.size(), 5);
        for u in 0..5 {
            for v in (u + 1)..5 {
                assert_eq!(co.has_edge(u, v), !c5.has_edge(u, v));
            }
        }
    }

    #[test]
    fn max_degree_vertices_examples() {
        assert_eq!(Graph::star(3).max_degree_vertices().unwrap(), vec![0]);
        assert_eq!(
            Graph::cycle_graph(5).max_degree_vertices().unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(
            Graph::path_graph(4).max_degree_vertices().unwrap(),
            vec![1, 2]
        );
        // edgeless: Δ = 0, every vertex attains it
        assert_eq!(
            Graph::edgeless(3).max_degree_vertices().unwrap(),
            vec![0, 1, 2]
        );
        assert_eq!(
            Graph::edgeless(0).max_degree_vertices().unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn delete_vertex_relabels() {
        let p4 = Graph::path_graph(4);
        let (g, map) = p4.delete_vertex(3).unwrap();
        assert_eq!(g, Graph::path_graph(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (g, map) = p4.delete_vertex(1).unwrap();
        assert_eq!(g, Graph::new(3, &[(1, 2)]).unwrap());
        assert_eq!(map, vec![0, 2, 3]);

        let (g, _) = Graph::edgeless(1).delete_vertex(0).unwrap();
        assert_eq!(g.order(), 0);

        assert!(p4.delete_vertex(4).is_err());
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::cycle_graph(5).components().len(), 1);
        assert_eq!(
            Graph::edgeless(3).components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert!(Graph::edgeless(0).is_connected());
        assert!(!two_k2.is_connected());
    }
}
