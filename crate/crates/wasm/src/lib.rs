//! WebAssembly bindings for the browser demo.
//!
//! Three entry points, all returning JSON strings so the page needs no
//! framework: [`analyze`] for pasted graph6 or edge-list input,
//! [`generate`] for seeded class generators, and [`fixture`] for the named
//! literature graphs. The JSON carries everything the canvas needs: edges,
//! max-degree vertices, the longest-path intersection, a sample of longest
//! paths to cycle through, class certificates, and the theorem verdict.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use gallai_core::codec;
use gallai_core::fixtures;
use gallai_core::generate::{GenSpec, GraphClass};
use gallai_core::graph::Graph;
use gallai_core::longest::{enumerate_longest_paths_capped, EngineOptions};
use gallai_core::recognizers::{find_induced_2k2, is_chordal, is_cochordal, split_partition};
use gallai_core::theorem::{find_dominating_path, verify_theorem1, TheoremError};

/// Demo guard: exhaustive path enumeration on bigger graphs would stall the
/// browser's main thread.
const MAX_DEMO_ORDER: usize = 24;

/// At most this many distinct longest paths are enumerated…
const PATH_CAP: usize = 2000;
/// …and at most this many are shipped to the page for cycling.
const PATHS_IN_JSON: usize = 120;

#[derive(Serialize)]
struct Analysis {
    n: usize,
    m: usize,
    graph6: String,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    delta_vertices: Vec<usize>,
    longest_order: usize,
    path_count: usize,
    path_count_complete: bool,
    longest_paths: Vec<Vec<usize>>,
    intersection: Vec<usize>,
    two_k2_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    two_k2_witness: Option<[usize; 4]>,
    split: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    split_clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    split_independent: Option<Vec<usize>>,
    chordal: bool,
    cochordal: bool,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    dominating_path: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn err_json(msg: impl Into<String>) -> String {
    serde_json::to_string(&Failure { error: msg.into() }).unwrap()
}

fn analyze_graph(g: &Graph) -> String {
    if g.order() == 0 {
        return err_json("the graph has no vertices");
    }
    if g.order() > MAX_DEMO_ORDER {
        return err_json(format!(
            "demo limit: at most {MAX_DEMO_ORDER} vertices (got {})",
            g.order()
        ));
    }
    let enumeration =
        enumerate_longest_paths_capped(g, PATH_CAP, &EngineOptions::default()).unwrap();
    let intersection = enumeration
        .paths
        .iter()
        .fold(g.vertex_mask(), |acc, p| acc & p.vertex_mask());
    let witness = find_induced_2k2(g);
    let split = split_partition(g);
    let report = verify_theorem1(g).unwrap();
    let dominating_path = match find_dominating_path(g) {
        Ok(p) => Some(p.vertices().to_vec()),
        Err(TheoremError::NoEdges | TheoremError::Unconnectable { .. }) => None,
        Err(e) => return err_json(e.to_string()),
    };
    let analysis = Analysis {
        n: g.order(),
        m: g.size(),
        graph6: codec::write_graph6(g),
        edges: g.edges().to_vec(),
        degrees: (0..g.order()).map(|v| g.degree(v)).collect(),
        delta_vertices: g.max_degree_vertices().unwrap(),
        longest_order: enumeration.paths[0].order(),
        path_count: enumeration.paths.len(),
        path_count_complete: enumeration.complete,
        longest_paths: enumeration
            .paths
            .iter()
            .take(PATHS_IN_JSON)
            .map(|p| p.vertices().to_vec())
            .collect(),
        // the intersection over a truncated sample would only be an upper
        // bound; report the true set in that case via vertex deletion
        intersection: if enumeration.complete {
            gallai_core::bits::to_vec(intersection)
        } else {
            gallai_core::longest::intersection_of_longest_paths(
                g,
                gallai_core::longest::IntersectionMethod::Deletion,
            )
            .unwrap()
            .intersection
        },
        two_k2_free: witness.is_none(),
        two_k2_witness: witness.map(|w| [w.a, w.b, w.c, w.d]),
        split: split.is_some(),
        split_clique: split.as_ref().map(|p| p.clique.clone()),
        split_independent: split.as_ref().map(|p| p.independent.clone()),
        chordal: is_chordal(g).is_some(),
        cochordal: is_cochordal(g),
        verdict: report.verdict.to_string(),
        dominating_path,
    };
    serde_json::to_string(&analysis).unwrap()
}

/// Analyzes pasted input: a single graph6 line, or an edge list
/// (`n m` header, then `u v` lines).
#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    let trimmed = input.trim();
    let parsed = if trimmed.lines().count() <= 1 {
        codec::parse_graph6(trimmed).map_err(|e| e.to_string())
    } else {
        codec::parse_edge_list(trimmed).map_err(|e| e.to_string())
    };
    match parsed {
        Ok(g) => analyze_graph(&g),
        Err(e) => err_json(e),
    }
}

/// Generates a graph from a seeded class generator and analyzes it.
/// `class` is one of `split`, `chordal`, `cochordal`, `twok2free`, `er`.
#[wasm_bindgen]
pub fn generate(class: &str, n: usize, density: f64, seed: u64) -> String {
    let class: GraphClass = match class.parse() {
        Ok(c) => c,
        Err(e) => return err_json(e),
    };
    if n > MAX_DEMO_ORDER {
        return err_json(format!("demo limit: at most {MAX_DEMO_ORDER} vertices"));
    }
    if !(0.0..=1.0).contains(&density) {
        return err_json("density must lie in [0, 1]");
    }
    let g = GenSpec {
        n,
        density,
        seed,
        class,
    }
    .generate();
    analyze_graph(&g)
}

/// Analyzes a named fixture; `walther-zamfirescu-12` is the 12-vertex
/// graph whose longest paths have empty intersection.
#[wasm_bindgen]
pub fn fixture(name: &str) -> String {
    match fixtures::fixture(name) {
        Ok(g) => analyze_graph(&g),
        Err(e) => err_json(e.to_string()),
    }
}
