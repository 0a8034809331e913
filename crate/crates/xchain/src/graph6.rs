//! The graph6 format for undirected simple graphs.
//!
//! Each byte carries six bits, offset by 63. The vertex count comes first
//! (one byte below 63, else `~` plus three bytes); then the upper triangle
//! of the adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), ...`),
//! padded with zeros to a multiple of six bits.

use thiserror::Error;
use xchain_core::bitset::MAX_VERTICES;
use xchain_core::Graph;

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {index}: {byte:#04x} is outside the graph6 range 63..=126")]
    InvalidByte { index: usize, byte: u8 },
    #[error("truncated vertex count")]
    TruncatedCount,
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("expected {expected} adjacency bytes for {n} vertices, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("expected exactly one graph, found {0}")]
    NotSingle(usize),
}

fn sextets(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::InvalidByte {
                    index: offset + i,
                    byte: b,
                })
            }
        })
        .collect()
}

/// Parses one graph6 string (no header, no newline).
pub fn parse_graph6_line(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let (n, start) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            let s = sextets(bytes.get(2..8).ok_or(Graph6Error::TruncatedCount)?, 2)?;
            let n = s.iter().fold(0u64, |acc, &x| (acc << 6) | x as u64);
            (usize::try_from(n).unwrap_or(usize::MAX), 8)
        } else {
            let s = sextets(bytes.get(1..4).ok_or(Graph6Error::TruncatedCount)?, 1)?;
            (s.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize), 4)
        }
    } else {
        (sextets(&bytes[..1], 0)?[0] as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let body = sextets(&bytes[start..], start)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("each pair appears once");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses a file of graph6 strings, one per line, with an optional header
/// on the first line. Blank lines are skipped.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(HEADER).unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6_line(line).map_err(|e| Graph6Error::AtLine {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Parses text holding exactly one graph.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut all = parse_graph6_all(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("length checked")),
        k => Err(Graph6Error::NotSingle(k)),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
