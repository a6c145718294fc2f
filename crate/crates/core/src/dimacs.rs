//! DIMACS `.col` parsing and writing.
//!
//! Input follows the classic format: a `p edge <n> <m>` header, `e <u> <v>`
//! edge lines with 1-based vertex ids, and `c ...` comment lines. Public
//! instance files are often dirty, so duplicate edge lines (in either
//! orientation) are merged and counted rather than rejected.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("missing 'p edge' header")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed line")]
    MalformedLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

/// A parsed graph plus the number of duplicate edge lines that were merged.
#[derive(Debug, Clone)]
pub struct DimacsLoad {
    pub graph: Graph,
    pub merged_duplicates: usize,
}

/// Parses DIMACS `.col` text. Ids are shifted to 0-based.
pub fn load_dimacs(text: &str) -> Result<DimacsLoad, DimacsError> {
    let mut header: Option<usize> = None;
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut merged = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        let mut tokens = s.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                let kind = tokens.next();
                let n = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let m = tokens.next().and_then(|t| t.parse::<usize>().ok());
                match (kind, n, m, tokens.next()) {
                    (Some("edge"), Some(n), Some(_m), None) => header = Some(n),
                    _ => return Err(DimacsError::MalformedHeader { line }),
                }
            }
            Some("e") => {
                let n = header.ok_or(DimacsError::MissingHeader)?;
                let u = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let v = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (u, v, tokens.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(DimacsError::MalformedLine { line }),
                };
                for &w in &[u, v] {
                    if w == 0 || w > n {
                        return Err(DimacsError::VertexOutOfRange {
                            line,
                            vertex: w,
                            vertex_count: n,
                        });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, vertex: u });
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if seen.insert(key) {
                    edges.push(key);
                } else {
                    merged += 1;
                }
            }
            _ => return Err(DimacsError::MalformedLine { line }),
        }
    }

    let n = header.ok_or(DimacsError::MissingHeader)?;
    let graph = Graph::from_edges(n, &edges).expect("edges validated against header");
    Ok(DimacsLoad {
        graph,
        merged_duplicates: merged,
    })
}

/// Writes DIMACS text: header first, then one `e` line per edge with
/// ascending 1-based endpoints, lines sorted. `load_dimacs` inverts it
/// exactly.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn parses_a_path() {
        let loaded = load_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(loaded.graph.vertex_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.merged_duplicates, 0);
        assert!(loaded.graph.has_edge(0, 1));
        assert!(loaded.graph.has_edge(1, 2));
        assert!(!loaded.graph.has_edge(0, 2));
    }

    #[test]
    fn merges_symmetric_duplicates() {
        let loaded = load_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.merged_duplicates, 1);
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = load_dimacs("p edge 2 1\ne 1 3\n").unwrap_err();
        assert!(matches!(
            err,
            DimacsError::VertexOutOfRange {
                vertex: 3,
                vertex_count: 2,
                ..
            }
        ));
    }

    #[test]
    fn rejects_self_loop_and_bad_header() {
        assert!(matches!(
            load_dimacs("p edge 2 1\ne 2 2\n"),
            Err(DimacsError::SelfLoop { vertex: 2, .. })
        ));
        assert!(matches!(
            load_dimacs("p vertex 2 1\n"),
            Err(DimacsError::MalformedHeader { line: 1 })
        ));
        assert!(matches!(
            load_dimacs("e 1 2\n"),
            Err(DimacsError::MissingHeader)
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "c a comment\n\np edge 3 3\nc another\ne 1 2\ne 2 3\ne 1 3\n";
        let loaded = load_dimacs(text).unwrap();
        assert_eq!(loaded.graph.edge_count(), 3);
    }

    #[test]
    fn write_is_bit_exact() {
        assert_eq!(write_dimacs(&Graph::empty(0)), "p edge 0 0\n");
        let c3 = generate(FamilySpec::Cycle(3)).unwrap();
        assert_eq!(write_dimacs(&c3), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn round_trip_crown() {
        let g = generate(FamilySpec::Crown(4)).unwrap();
        let loaded = load_dimacs(&write_dimacs(&g)).unwrap();
        assert_eq!(loaded.graph, g);
        assert_eq!(loaded.merged_duplicates, 0);
    }
}
