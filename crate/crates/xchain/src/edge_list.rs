//! Plain-text edge lists.
//!
//! ```text
//! # comments run to the end of the line
//! n m
//! u v        (m lines, 1 <= u, v <= n, u != v)
//! ```
//!
//! Emission is canonical: header, then edges with `u < v` in ascending order.

use std::fmt::Write as _;

use thiserror::Error;
use xchain_core::bitset::MAX_VERTICES;
use xchain_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected \"n m\"")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}, expected \"u v\"")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn two_numbers(body: &str) -> Option<(usize, usize)> {
    let mut it = body.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let (hline, hbody) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = two_numbers(hbody).ok_or_else(|| EdgeListError::MalformedHeader {
        line: hline,
        text: hbody.to_string(),
    })?;
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut g = Graph::new(n);
    let mut found = 0;
    for (line, body) in lines {
        let (u, v) = two_numbers(body).ok_or_else(|| EdgeListError::MalformedLine {
            line,
            text: body.to_string(),
        })?;
        for vertex in [u, v] {
            if vertex == 0 || vertex > n {
                return Err(EdgeListError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u - 1, v - 1) {
            return Err(EdgeListError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        g.add_edge(u - 1, v - 1)
            .expect("range, loop and duplicate already checked");
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { declared: m, found });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use xchain_core::graph::{family, FamilyKind};

    #[test]
    fn paths_and_triangles() {
        let l3 = parse_edge_list("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(l3, family(FamilyKind::Linear, 3).unwrap());
        let k3 = parse_edge_list("3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(k3, family(FamilyKind::Complete, 3).unwrap());
        assert_eq!(emit_edge_list(&k3), "3 3\n1 2\n1 3\n2 3\n");
    }

    #[test]
    fn comments_blank_lines_and_reversed_pairs() {
        let text = "# triangle\n\n3 3  # header\n2 1\n\n3 2\n1 3 # last\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, family(FamilyKind::Complete, 3).unwrap());
        assert_eq!(parse_edge_list("1 0\n").unwrap(), Graph::new(1));
        assert_eq!(parse_edge_list("0 0").unwrap(), Graph::new(0));
    }

    #[test]
    fn diagnostics_are_distinct() {
        use EdgeListError::*;
        let cases: [(&str, EdgeListError); 8] = [
            ("", MissingHeader),
            ("# only a comment\n", MissingHeader),
            (
                "3\n",
                MalformedHeader {
                    line: 1,
                    text: "3".into(),
                },
            ),
            (
                "3 1\n1 x\n",
                MalformedLine {
                    line: 2,
                    text: "1 x".into(),
                },
            ),
            ("3 1\n2 2\n", SelfLoop { line: 2, vertex: 2 }),
            (
                "3 2\n1 2\n2 1\n",
                DuplicateEdge {
                    line: 3,
                    u: 1,
                    v: 2,
                },
            ),
            (
                "3 1\n1 4\n",
                VertexOutOfRange {
                    line: 2,
                    vertex: 4,
                    n: 3,
                },
            ),
            (
                "3 2\n1 2\n",
                EdgeCountMismatch {
                    declared: 2,
                    found: 1,
                },
            ),
        ];
        for (text, want) in cases {
            assert_eq!(parse_edge_list(text), Err(want), "{text:?}");
        }
        assert_eq!(
            parse_edge_list("3 1\n0 1\n"),
            Err(VertexOutOfRange {
                line: 2,
                vertex: 0,
                n: 3
            })
        );
        assert!(matches!(
            parse_edge_list("2000 0\n"),
            Err(TooManyVertices { n: 2000, .. })
        ));
    }

    #[test]
    fn messages_name_the_line() {
        let err = parse_edge_list("3 1\n1 1\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: self-loop on vertex 1");
    }
}
