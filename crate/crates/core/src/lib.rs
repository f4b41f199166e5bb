//! A verification laboratory for longest-path intersections in 2K2-free
//! graphs.
//!
//! A graph is *2K2-free* if it contains no pair of independent edges as an
//! induced subgraph. In a nonempty 2K2-free graph every vertex of maximum
//! degree is common to all longest paths, so in particular the longest paths
//! of such a graph have nonempty intersection — a positive answer to
//! Gallai's 1966 question for this class (the question is false in general;
//! the smallest counterexample has 12 vertices).
//!
//! The crate packages everything needed to check these facts exhaustively at
//! small order and statistically at desk scale:
//!
//! - [`Graph`] / [`Path`]: immutable simple graphs (up to 64 vertices) with
//!   bitset adjacency, and paths canonicalized up to reversal.
//! - [`recognizers`]: certificate-producing recognition of the 2K2-free,
//!   split, chordal, and cochordal classes.
//! - [`longest`]: exact longest-path order, enumeration of all longest
//!   paths, and their intersection, by two independent methods.
//! - [`theorem`]: executable forms of the dominating-path lemma, the
//!   path-rewiring lemma, the meeting-vertex lemma, the independent-edge-set
//!   construction, the max-degree verifier, and a counterexample hunt.
//! - [`generate`]: deterministic seeded generators for every class the
//!   property suites quantify over.
//! - [`codec`] / [`fixtures`]: graph6 and edge-list formats, plus the
//!   12-vertex Walther–Voss/Zamfirescu counterexample as validated data.
//!
//! All values are immutable and all operations are pure functions, so
//! batches may be processed from parallel threads freely.

pub mod bits;
pub mod codec;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod longest;
pub mod path;
pub mod recognizers;
pub mod theorem;

pub use graph::{Graph, GraphError};
pub use longest::{IntersectionMethod, IntersectionReport};
pub use path::Path;
pub use recognizers::{EliminationOrder, SplitPartition, TwoK2Witness};
pub use theorem::{LemmaViolation, MeetingSelection, TheoremReport, TheoremVerdict};
