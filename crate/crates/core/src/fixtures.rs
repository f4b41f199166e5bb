//! Named literature graphs shipped as validated data files.

use thiserror::Error;

use crate::codec;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}; available: {names:?}", names = FIXTURE_NAMES)]
    Unknown(String),
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &["walther-zamfirescu-12"];

const WALTHER_ZAMFIRESCU_12: &str = include_str!("../data/walther_zamfirescu_12.edges");

/// Returns a named fixture graph.
///
/// `walther-zamfirescu-12` is the 12-vertex graph with empty longest-path
/// intersection — the smallest counterexample to Gallai's question. Its edge
/// list ships as a data file with a provenance note and is accepted only
/// because the test suite re-establishes the defining properties; see
/// `data/walther_zamfirescu_12.edges`.
pub fn fixture(name: &str) -> Result<Graph, FixtureError> {
    match name {
        "walther-zamfirescu-12" => {
            Ok(codec::parse_edge_list(WALTHER_ZAMFIRESCU_12)
                .expect("shipped fixture data must parse"))
        }
        other => Err(FixtureError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::longest::{intersection_of_longest_paths, IntersectionMethod};

    #[test]
    fn fixture_validation_suite() {
        let g = fixture("walther-zamfirescu-12").unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 15);
        assert!(g.is_connected());
        let rep = intersection_of_longest_paths(&g, IntersectionMethod::Enumeration).unwrap();
        assert_eq!(rep.longest_order, 10);
        assert!(rep.intersection.is_empty(), "found {:?}", rep.intersection);
        let del = intersection_of_longest_paths(&g, IntersectionMethod::Deletion).unwrap();
        assert!(del.intersection.is_empty());
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert_eq!(
            fixture("unknown").unwrap_err(),
            FixtureError::Unknown("unknown".into())
        );
    }
}
