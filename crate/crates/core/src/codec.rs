//! Text formats: graph6 and a plain edge-list format.
//!
//! graph6 is the standard printable encoding for small simple graphs: a
//! header giving the order, then the upper triangle of the adjacency matrix
//! packed column by column into 6-bit groups, each offset by 63 into the
//! printable ASCII range. The edge-list format is `n m` on the first line
//! followed by `m` lines `u v`; blank lines and lines starting with `#` are
//! ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty input")]
    EmptyInput,
    #[error("byte {byte:#04x} at position {position} is outside the printable graph6 range")]
    NonPrintable { position: usize, byte: u8 },
    #[error("truncated graph6 header")]
    TruncatedHeader,
    #[error("graph6 payload has {got} bytes, expected {expected}")]
    PayloadLength { expected: usize, got: usize },
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("line {line}: expected {expected}, found {found:?}")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("expected {expected} edge lines, found {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Upper-triangle pair order used by graph6: `(0,1), (0,2), (1,2), (0,3)…`
fn column_major_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

fn payload_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` tag is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text).trim_end();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::EmptyInput);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(CodecError::NonPrintable { position, byte });
        }
    }
    let sextet = |i: usize| (bytes[i] - 63) as usize;

    // order: one byte below 63 vertices, '~' + 3 bytes up to 2^18 - 1,
    // '~~' + 6 bytes beyond (always out of range here)
    let (n, header_len) = if bytes[0] != b'~' {
        (sextet(0), 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(CodecError::TruncatedHeader);
        }
        ((sextet(1) << 12) | (sextet(2) << 6) | sextet(3), 4)
    } else {
        if bytes.len() < 8 {
            return Err(CodecError::TruncatedHeader);
        }
        let n = (2..8).fold(0usize, |acc, i| (acc << 6) | sextet(i));
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(CodecError::OrderTooLarge(n));
    }

    let expected = payload_bytes(n);
    let got = bytes.len() - header_len;
    if got != expected {
        return Err(CodecError::PayloadLength { expected, got });
    }

    let mut edges = Vec::new();
    for (bit, (i, j)) in column_major_pairs(n).enumerate() {
        let byte = sextet(header_len + bit / 6);
        if byte >> (5 - bit % 6) & 1 == 1 {
            edges.push((i, j));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 63 <= n <= 64 given MAX_VERTICES
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in column_major_pairs(n) {
        group <<= 1;
        if g.has_edge(i, j) {
            group |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the edge-list format: header `n m`, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(CodecError::EmptyInput)?;
    let mut parts = header.split_whitespace();
    let parse_num = |line: usize, tok: Option<&str>, what: &'static str| {
        let tok = tok.ok_or(CodecError::Malformed {
            line,
            expected: what,
            found: String::new(),
        })?;
        tok.parse::<usize>().map_err(|_| CodecError::Malformed {
            line,
            expected: what,
            found: tok.to_string(),
        })
    };
    let n = parse_num(line, parts.next(), "vertex count")?;
    let m = parse_num(line, parts.next(), "edge count")?;
    if parts.next().is_some() {
        return Err(CodecError::Malformed {
            line,
            expected: "exactly `n m`",
            found: header.to_string(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let u = parse_num(line, parts.next(), "edge endpoint")?;
        let v = parse_num(line, parts.next(), "edge endpoint")?;
        if parts.next().is_some() {
            return Err(CodecError::Malformed {
                line,
                expected: "exactly `u v`",
                found: l.to_string(),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CodecError::EdgeCount {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

/// Writes the edge-list format, one trailing newline included.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bit-by-bit reference decoder, kept deliberately naive and separate
    /// from the production path.
    fn reference_decode(text: &str) -> (usize, Vec<(usize, usize)>) {
        let vals: Vec<u8> = text.bytes().map(|b| b - 63).collect();
        let n = vals[0] as usize;
        assert!(n < 63, "reference decoder handles short form only");
        let mut bits = Vec::new();
        for &v in &vals[1..] {
            for k in (0..6).rev() {
                bits.push(v >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn decodes_five_vertex_codes() {
        for code in ["D?{", "DQc", "D~{", "D??"] {
            let g = parse_graph6(code).unwrap();
            let (n, mut edges) = reference_decode(code);
            edges.sort_unstable();
            assert_eq!(g.order(), n, "order mismatch for {code}");
            assert_eq!(g.edges(), &edges[..], "edges mismatch for {code}");
        }
        // hand decoding: "D?{" is the star with center 4
        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        // "DQc" from the format's published example family
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn encodes_trivial_graphs() {
        assert_eq!(write_graph6(&Graph::edgeless(1)), "@");
        assert_eq!(write_graph6(&Graph::edgeless(0)), "?");
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn accepts_optional_format_tag() {
        assert_eq!(
            parse_graph6(">>graph6<<D?{").unwrap(),
            parse_graph6("D?{").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert_eq!(parse_graph6("").unwrap_err(), CodecError::EmptyInput);
        assert!(matches!(
            parse_graph6("D\x1f").unwrap_err(),
            CodecError::NonPrintable { .. }
        ));
        assert_eq!(
            parse_graph6("D?").unwrap_err(),
            CodecError::PayloadLength {
                expected: 2,
                got: 1
            }
        );
        assert_eq!(
            parse_graph6("D?{{").unwrap_err(),
            CodecError::PayloadLength {
                expected: 2,
                got: 3
            }
        );
        assert_eq!(parse_graph6("~").unwrap_err(), CodecError::TruncatedHeader);
        // long-form header for n = 100: fine format-wise, too large for us
        assert_eq!(
            parse_graph6("~?@c").map(|_| ()).unwrap_err(),
            CodecError::OrderTooLarge(100)
        );
    }

    #[test]
    fn long_form_header_round_trips_at_63() {
        let g = Graph::path_graph(63);
        let encoded = write_graph6(&g);
        assert!(encoded.starts_with('~'));
        assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_skips_comments_and_blanks() {
        let g = parse_edge_list("# provenance note\n\n3 2\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g, Graph::path_graph(3));
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(parse_edge_list("").unwrap_err(), CodecError::EmptyInput);
        assert!(matches!(
            parse_edge_list("3 x\n").unwrap_err(),
            CodecError::Malformed { line: 1, .. }
        ));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n").unwrap_err(),
            CodecError::EdgeCount {
                expected: 2,
                got: 1
            }
        );
        assert!(matches!(
            parse_edge_list("2 1\n0 0\n").unwrap_err(),
            CodecError::Graph(GraphError::LoopEdge(0))
        ));
    }
}
