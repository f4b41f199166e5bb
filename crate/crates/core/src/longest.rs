//! Exact longest-path computation.
//!
//! Two independent engines compute the longest-path order: a subset dynamic
//! program over (visited-set, endpoint) states for small graphs, and a
//! depth-first branch-and-bound with a reachability bound for anything
//! larger. On top of them sit full enumeration of the longest paths and the
//! intersection of their vertex sets, the latter again by two independent
//! methods (enumeration and vertex deletion) that must agree.
//!
//! "Longest" always means maximum vertex count; disconnected inputs are
//! legal and the maximum ranges over all components.

use std::collections::BTreeSet;

use crate::bits::{self, BitIter};
use crate::graph::{Graph, GraphError};
use crate::path::Path;

/// Largest order handled by the subset DP under default options. The DP
/// allocates one `u64` per vertex subset.
pub const DEFAULT_DP_THRESHOLD: usize = 24;

/// Hard memory guard for the DP (2^25 words = 256 MiB).
const DP_HARD_LIMIT: usize = 25;

/// How the intersection of longest paths was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionMethod {
    /// Intersect the vertex sets of all enumerated longest paths.
    Enumeration,
    /// Keep `v` iff deleting it strictly decreases the longest-path order.
    Deletion,
}

impl std::fmt::Display for IntersectionMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntersectionMethod::Enumeration => write!(f, "enumeration"),
            IntersectionMethod::Deletion => write!(f, "deletion"),
        }
    }
}

/// Tunables for the engines.
#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Use the subset DP for graphs up to this order, branch-and-bound above.
    pub dp_threshold: usize,
    /// Hard cap on the number of distinct longest paths the enumeration may
    /// produce; `None` means unlimited. When an intersection request trips
    /// the cap, the deletion method is used instead.
    pub enumeration_cap: Option<usize>,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            dp_threshold: DEFAULT_DP_THRESHOLD,
            enumeration_cap: None,
        }
    }
}

/// Answer object for "do all longest paths share a vertex?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    /// Maximum vertex count over all paths.
    pub longest_order: usize,
    /// Vertices common to all longest paths, ascending.
    pub intersection: Vec<usize>,
    /// Method that actually produced the result.
    pub method: IntersectionMethod,
    /// Number of distinct longest paths up to reversal; only known when the
    /// enumeration method ran to completion.
    pub path_count: Option<usize>,
}

/// Longest-path order with default options.
pub fn longest_path_order(g: &Graph) -> Result<usize, GraphError> {
    longest_path_order_with(g, &EngineOptions::default())
}

/// Longest-path order, dispatching on `opts.dp_threshold`.
pub fn longest_path_order_with(g: &Graph, opts: &EngineOptions) -> Result<usize, GraphError> {
    if g.order() <= opts.dp_threshold.min(DP_HARD_LIMIT) {
        longest_path_order_dp(g)
    } else {
        longest_path_order_branch_bound(g)
    }
}

/// Subset dynamic program: `state[mask]` holds the endpoints of paths whose
/// vertex set is exactly `mask`. The longest order is the largest popcount
/// of a realizable mask.
pub fn longest_path_order_dp(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    assert!(
        n <= DP_HARD_LIMIT,
        "subset DP allocates 2^n words; order {n} is past the hard limit of {DP_HARD_LIMIT}"
    );
    let full = 1usize << n;
    let mut state = vec![0u64; full];
    for v in 0..n {
        state[1 << v] = 1 << v;
    }
    let mut best = 1u32;
    for mask in 1..full {
        let endpoints = state[mask];
        if endpoints == 0 {
            continue;
        }
        best = best.max(mask.count_ones());
        for v in BitIter(endpoints) {
            for u in BitIter(g.adjacency_mask(v) & !(mask as u64)) {
                state[mask | (1 << u)] |= 1 << u;
            }
        }
    }
    Ok(best as usize)
}

/// Depth-first search over simple paths, pruned by how many vertices the
/// current endpoint can still reach through unvisited territory.
pub fn longest_path_order_branch_bound(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    let mut best = 1usize;
    for start in 0..n {
        bnb(g, 1u64 << start, start, 1, &mut best);
    }
    Ok(best)
}

fn bnb(g: &Graph, visited: u64, end: usize, len: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    let allowed = g.vertex_mask() & !visited;
    let ext = g.adjacency_mask(end) & allowed;
    if ext == 0 {
        return;
    }
    let reach = g.reachable_within(ext, allowed);
    if len + reach.count_ones() as usize <= *best {
        return;
    }
    for u in BitIter(ext) {
        bnb(g, visited | (1u64 << u), u, len + 1, best);
    }
}

/// Longest paths found by a capped enumeration. When `complete` is false
/// the cap was hit and `paths` holds only the sample of distinct longest
/// paths discovered before stopping (at least `cap` of them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub paths: Vec<Path>,
    pub complete: bool,
}

/// All longest paths, canonical and sorted lexicographically.
pub fn enumerate_longest_paths(g: &Graph) -> Result<Vec<Path>, GraphError> {
    let e = enumerate_longest_paths_capped(g, usize::MAX, &EngineOptions::default())?;
    debug_assert!(e.complete);
    Ok(e.paths)
}

/// Longest paths up to `cap` distinct ones; stops early once the cap is
/// reached.
pub fn enumerate_longest_paths_capped(
    g: &Graph,
    cap: usize,
    opts: &EngineOptions,
) -> Result<Enumeration, GraphError> {
    let target = longest_path_order_with(g, opts)?;
    let mut found: BTreeSet<Path> = BTreeSet::new();
    let mut seq = Vec::with_capacity(target);
    let mut complete = true;
    for start in 0..g.order() {
        seq.push(start);
        let more = dfs_enumerate(g, &mut seq, 1u64 << start, target, cap, &mut found);
        seq.pop();
        if !more {
            complete = false;
            break;
        }
    }
    Ok(Enumeration {
        paths: found.into_iter().collect(),
        complete,
    })
}

fn dfs_enumerate(
    g: &Graph,
    seq: &mut Vec<usize>,
    visited: u64,
    target: usize,
    cap: usize,
    found: &mut BTreeSet<Path>,
) -> bool {
    if seq.len() == target {
        found.insert(Path::canonical(seq.clone()));
        return found.len() <= cap;
    }
    let end = *seq.last().unwrap();
    let allowed = g.vertex_mask() & !visited;
    let ext = g.adjacency_mask(end) & allowed;
    if ext == 0 {
        return true;
    }
    let reach = g.reachable_within(ext, allowed);
    if seq.len() + (reach.count_ones() as usize) < target {
        return true;
    }
    for u in BitIter(ext) {
        seq.push(u);
        let ok = dfs_enumerate(g, seq, visited | (1u64 << u), target, cap, found);
        seq.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Intersection of all longest paths with default options.
pub fn intersection_of_longest_paths(
    g: &Graph,
    method: IntersectionMethod,
) -> Result<IntersectionReport, GraphError> {
    intersection_with(g, method, &EngineOptions::default())
}

/// Intersection of all longest paths. With `IntersectionMethod::Enumeration`
/// and a cap in `opts`, falls back to the deletion method when the cap
/// trips; the report's `method` field records what actually ran.
pub fn intersection_with(
    g: &Graph,
    method: IntersectionMethod,
    opts: &EngineOptions,
) -> Result<IntersectionReport, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    match method {
        IntersectionMethod::Enumeration => {
            let cap = opts.enumeration_cap.unwrap_or(usize::MAX);
            let e = enumerate_longest_paths_capped(g, cap, opts)?;
            if !e.complete {
                return intersection_with(g, IntersectionMethod::Deletion, opts);
            }
            let common = e
                .paths
                .iter()
                .fold(g.vertex_mask(), |acc, p| acc & p.vertex_mask());
            Ok(IntersectionReport {
                longest_order: e.paths[0].order(),
                intersection: bits::to_vec(common),
                method: IntersectionMethod::Enumeration,
                path_count: Some(e.paths.len()),
            })
        }
        IntersectionMethod::Deletion => {
            let longest = longest_path_order_with(g, opts)?;
            let mut intersection = Vec::new();
            for v in 0..g.order() {
                let (h, _) = g.delete_vertex(v)?;
                let sub = if h.order() == 0 {
                    0
                } else {
                    longest_path_order_with(&h, opts)?
                };
                if sub < longest {
                    intersection.push(v);
                }
            }
            Ok(IntersectionReport {
                longest_order: longest,
                intersection,
                method: IntersectionMethod::Deletion,
                path_count: None,
            })
        }
    }
}

/// True iff `p` is valid in `g` and attains the longest order.
pub fn is_longest_path(g: &Graph, p: &Path) -> Result<bool, GraphError> {
    Path::new(g, p.vertices().to_vec())?;
    Ok(p.order() == longest_path_order(g)?)
}
