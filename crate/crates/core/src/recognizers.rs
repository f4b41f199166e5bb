//! Certificate-producing recognition of the 2K2-free, split, chordal, and
//! cochordal graph classes.
//!
//! Every positive or negative verdict comes with a small checkable object:
//! an induced-2K2 witness, a clique/independent-set partition, or a perfect
//! elimination ordering. Callers never have to trust the recognizer — each
//! certificate type has a `validate` method that checks it against the graph
//! by definition.

use crate::bits::{self, BitIter};
use crate::graph::Graph;

/// Four vertices certifying an induced 2K2: `ab` and `cd` are edges and
/// none of `ac`, `ad`, `bc`, `bd` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoK2Witness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoK2Witness {
    /// Normalizes so that `a < b`, `c < d`, and `(a,b) < (c,d)`.
    pub fn canonical(e1: (usize, usize), e2: (usize, usize)) -> TwoK2Witness {
        let e1 = (e1.0.min(e1.1), e1.0.max(e1.1));
        let e2 = (e2.0.min(e2.1), e2.0.max(e2.1));
        let (first, second) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        TwoK2Witness {
            a: first.0,
            b: first.1,
            c: second.0,
            d: second.1,
        }
    }

    /// Checks the witness against `g` by definition.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = [self.a, self.b, self.c, self.d];
        if vs.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let distinct = (1..4).all(|i| (0..i).all(|j| vs[i] != vs[j]));
        distinct
            && g.has_edge(self.a, self.b)
            && g.has_edge(self.c, self.d)
            && !g.has_edge(self.a, self.c)
            && !g.has_edge(self.a, self.d)
            && !g.has_edge(self.b, self.c)
            && !g.has_edge(self.b, self.d)
    }
}

/// A split partition: `clique` induces a complete graph, `independent` an
/// edgeless one, and together they cover every vertex exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> bool {
        let k = bits::from_iter(self.clique.iter().copied());
        let i = bits::from_iter(self.independent.iter().copied());
        if self.clique.len() + self.independent.len() != g.order() {
            return false;
        }
        if k & i != 0 || (k | i) != g.vertex_mask() {
            return false;
        }
        let clique_ok = self
            .clique
            .iter()
            .all(|&v| k & !(1u64 << v) & !g.adjacency_mask(v) == 0);
        let independent_ok = self
            .independent
            .iter()
            .all(|&v| g.adjacency_mask(v) & i == 0);
        clique_ok && independent_ok
    }
}

/// A perfect elimination ordering: for each vertex, its neighbors occurring
/// later in the order form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

impl EliminationOrder {
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.order.len() != n {
            return false;
        }
        let mut seen = 0u64;
        for &v in &self.order {
            if v >= n || seen & (1u64 << v) != 0 {
                return false;
            }
            seen |= 1u64 << v;
        }
        for (i, &v) in self.order.iter().enumerate() {
            let later = bits::from_iter(self.order[i + 1..].iter().copied());
            let ln = g.adjacency_mask(v) & later;
            for x in BitIter(ln) {
                for y in BitIter(ln & !bits::full_mask(x + 1)) {
                    if !g.has_edge(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// First induced 2K2 in lexicographic order over ordered pairs of disjoint
/// edges, or `None` when the graph is 2K2-free.
pub fn find_induced_2k2(g: &Graph) -> Option<TwoK2Witness> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let reach = g.adjacency_mask(a) | g.adjacency_mask(b) | (1u64 << a) | (1u64 << b);
        for &(c, d) in &edges[i + 1..] {
            if reach & ((1u64 << c) | (1u64 << d)) == 0 {
                return Some(TwoK2Witness { a, b, c, d });
            }
        }
    }
    None
}

/// Equivalent to `find_induced_2k2(g).is_none()`.
pub fn is_2k2_free(g: &Graph) -> bool {
    find_induced_2k2(g).is_none()
}

/// Split recognition via the degree-sequence characterization.
///
/// With degrees sorted non-increasingly as `d1 >= … >= dn` and
/// `m = max{ i : d_i >= i-1 }`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; the `m` vertices of largest
/// degree then form a clique and the rest an independent set. The
/// reconstructed partition is validated by definition before it is
/// returned, so the verdict never rests on the characterization alone.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    if n == 0 {
        return Some(SplitPartition {
            clique: vec![],
            independent: vec![],
        });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let mut m = 0;
    for i in 1..=n {
        if degrees[i - 1] >= i - 1 {
            m = i;
        }
    }
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique = by_degree[..m].to_vec();
    let mut independent = by_degree[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let partition = SplitPartition {
        clique,
        independent,
    };
    partition.validate(g).then_some(partition)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// Chordality via lexicographic BFS plus a perfect-elimination check.
///
/// Lex-BFS visits vertices preferring those with lexicographically largest
/// label of already-visited neighbors (lowest id on ties); the reverse of
/// the visit order is a perfect elimination ordering exactly when the graph
/// is chordal, which the final check establishes directly.
pub fn is_chordal(g: &Graph) -> Option<EliminationOrder> {
    let n = g.order();
    let visit = lex_bfs(g);
    debug_assert_eq!(visit.len(), n);

    let order: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // classical check: for each v, let w be its earliest later neighbor;
    // the remaining later neighbors of v must all be neighbors of w
    for (i, &v) in order.iter().enumerate() {
        let later = g
            .neighbors(v)
            .filter(|&u| pos[u] > i)
            .collect::<Vec<usize>>();
        let Some(&w) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != w && !g.has_edge(u, w) {
                return None;
            }
        }
    }
    Some(EliminationOrder { order })
}

/// Lexicographic BFS visit order with lowest-id tie-breaking, by partition
/// refinement.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.order();
    // sequence of cells, each sorted ascending; the front cell's first
    // vertex is visited next
    let mut cells: Vec<Vec<usize>> = if n == 0 {
        vec![]
    } else {
        vec![(0..n).collect()]
    };
    let mut visit = Vec::with_capacity(n);
    while let Some(front) = cells.first_mut() {
        let v = front.remove(0);
        if front.is_empty() {
            cells.remove(0);
        }
        visit.push(v);
        let nv = g.adjacency_mask(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        for cell in cells {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                cell.into_iter().partition(|&u| nv & (1u64 << u) != 0);
            if !hit.is_empty() {
                next.push(hit);
            }
            if !miss.is_empty() {
                next.push(miss);
            }
        }
        cells = next;
    }
    visit
}

/// A graph is cochordal when its complement is chordal.
pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Brute-force oracle: scan all ordered 4-tuples for an induced 2K2.
    fn naive_has_2k2(g: &Graph) -> bool {
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let vs = [a, b, c, d];
                        let distinct = (1..4).all(|i| (0..i).all(|j| vs[i] != vs[j]));
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, c)
                            && !g.has_edge(b, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn p5_has_the_expected_witness() {
        let p5 = Graph::path_graph(5);
        let w = find_induced_2k2(&p5).unwrap();
        assert_eq!(
            w,
            TwoK2Witness {
                a: 0,
                b: 1,
                c: 3,
                d: 4
            }
        );
        assert!(w.validate(&p5));
        assert!(naive_has_2k2(&p5));
        assert!(!is_2k2_free(&p5));
    }

    #[test]
    fn c5_is_2k2_free() {
        let c5 = Graph::cycle_graph(5);
        assert!(find_induced_2k2(&c5).is_none());
        assert!(!naive_has_2k2(&c5));
    }

    #[test]
    fn two_k2_itself() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let w = find_induced_2k2(&g).unwrap();
        assert_eq!(
            w,
            TwoK2Witness {
                a: 0,
                b: 1,
                c: 2,
                d: 3
            }
        );
        assert!(w.validate(&g));
    }

    #[test]
    fn edgeless_is_2k2_free() {
        assert!(is_2k2_free(&Graph::edgeless(5)));
        assert!(is_2k2_free(&Graph::edgeless(0)));
    }

    #[test]
    fn split_examples() {
        // clique {0,1,2} with pendants 3-0 and 4-1
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert!(p.validate(&g));
        assert!(p.clique.contains(&0) && p.clique.contains(&1));

        assert!(split_partition(&Graph::cycle_graph(5)).is_none());

        let k3 = Graph::complete(3);
        let p = split_partition(&k3).unwrap();
        assert!(p.validate(&k3));

        // star: center plus one leaf in the clique works
        let star = Graph::star(3);
        assert!(split_partition(&star).unwrap().validate(&star));

        assert!(split_partition(&Graph::edgeless(4))
            .unwrap()
            .validate(&Graph::edgeless(4)));
    }

    /// Exhaustive split oracle for small n: try every clique subset.
    fn naive_is_split(g: &Graph) -> bool {
        let n = g.order();
        for k in 0u64..(1u64 << n) {
            let i = g.vertex_mask() & !k;
            let clique_ok =
                crate::bits::vertices_of(k).all(|v| k & !(1u64 << v) & !g.adjacency_mask(v) == 0);
            let ind_ok = crate::bits::vertices_of(i).all(|v| g.adjacency_mask(v) & i == 0);
            if clique_ok && ind_ok {
                return true;
            }
        }
        false
    }

    #[test]
    fn split_matches_exhaustive_oracle_up_to_5() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1u64 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                assert_eq!(
                    split_partition(&g).is_some(),
                    naive_is_split(&g),
                    "disagreement on n={n} edges={edges:?}"
                );
            }
        }
    }

    #[test]
    fn chordal_examples() {
        // any tree is chordal
        let tree = Graph::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let peo = is_chordal(&tree).unwrap();
        assert!(peo.validate(&tree));

        assert!(is_chordal(&Graph::cycle_graph(4)).is_none());
        assert!(is_chordal(&Graph::cycle_graph(5)).is_none());
        assert!(is_chordal(&Graph::cycle_graph(6)).is_none());

        let k4 = Graph::complete(4);
        let peo = is_chordal(&k4).unwrap();
        assert!(peo.validate(&k4));

        // C4 plus a chord is chordal
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert!(is_chordal(&g).unwrap().validate(&g));

        assert!(is_chordal(&Graph::edgeless(0)).is_some());
    }

    #[test]
    fn cochordal_examples() {
        // complement of 2K2 is C4, which is not chordal
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_cochordal(&two_k2));
        assert!(is_cochordal(&Graph::edgeless(1)));
        // complete graphs are cochordal (complement edgeless)
        assert!(is_cochordal(&Graph::complete(5)));
    }

    #[test]
    fn elimination_order_validator_rejects_garbage() {
        let c4 = Graph::cycle_graph(4);
        assert!(!EliminationOrder {
            order: vec![0, 1, 2, 3]
        }
        .validate(&c4));
        assert!(!EliminationOrder {
            order: vec![0, 0, 1, 2]
        }
        .validate(&c4));
        assert!(!EliminationOrder { order: vec![0] }.validate(&c4));
    }
}
