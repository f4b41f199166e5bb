//! Paths as values: distinct vertices, consecutively adjacent, canonical up
//! to reversal.

use crate::bits;
use crate::graph::{Graph, GraphError};

/// A path in some host graph, stored in canonical orientation: the vertex
/// sequence is lexicographically no larger than its reverse. Two traversal
/// directions of the same path therefore compare equal.
///
/// `order` counts vertices, `length` counts edges; a single vertex is a
/// valid path of order 1 and length 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    /// Validates `vertices` against `g` and canonicalizes.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= g.order() {
                return Err(GraphError::VertexOutOfRange { v, n: g.order() });
            }
            if seen & (1u64 << v) != 0 {
                return Err(GraphError::RepeatedVertex(v));
            }
            seen |= 1u64 << v;
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::NotAdjacent(w[0], w[1]));
            }
        }
        Ok(Self::canonical(vertices))
    }

    /// Canonicalizes a sequence already known to be a valid path.
    pub(crate) fn canonical(mut vertices: Vec<usize>) -> Path {
        debug_assert!(!vertices.is_empty());
        if Self::reverse_is_smaller(&vertices) {
            vertices.reverse();
        }
        Path { vertices }
    }

    fn reverse_is_smaller(seq: &[usize]) -> bool {
        let k = seq.len();
        for i in 0..k {
            let (a, b) = (seq[i], seq[k - 1 - i]);
            if a != b {
                return b < a;
            }
        }
        false
    }

    /// Vertex count.
    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Edge count.
    #[inline]
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The canonical vertex sequence.
    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Vertex set as a bitmask.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        bits::from_iter(self.vertices.iter().copied())
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// The two endpoints (equal for an order-1 path).
    #[inline]
    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Re-checks validity against a graph, e.g. after the host changed.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        Path::new(g, self.vertices.clone()).is_ok()
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_up_to_reversal() {
        let g = Graph::path_graph(4);
        let a = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let b = Path::new(&g, vec![3, 2, 1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3]);
        assert_eq!(a.order(), 4);
        assert_eq!(a.length(), 3);
    }

    #[test]
    fn rejects_bad_sequences() {
        let g = Graph::path_graph(4);
        assert_eq!(Path::new(&g, vec![]).unwrap_err(), GraphError::EmptyPath);
        assert_eq!(
            Path::new(&g, vec![0, 1, 0]).unwrap_err(),
            GraphError::RepeatedVertex(0)
        );
        assert_eq!(
            Path::new(&g, vec![0, 2]).unwrap_err(),
            GraphError::NotAdjacent(0, 2)
        );
        assert_eq!(
            Path::new(&g, vec![4]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 4, n: 4 }
        );
    }

    #[test]
    fn single_vertex_path() {
        let g = Graph::edgeless(2);
        let p = Path::new(&g, vec![1]).unwrap();
        assert_eq!(p.order(), 1);
        assert_eq!(p.length(), 0);
        assert_eq!(p.endpoints(), (1, 1));
    }
}
