//! Graph sources: files, stdin and generated families.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;
use xchain_core::graph::{family, FamilyKind};
use xchain_core::Graph;

use crate::edge_list::{parse_edge_list, EdgeListError};
use crate::graph6::{parse_graph6, Graph6Error, HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Auto,
    EdgeList,
    Graph6,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(InputFormat::Auto),
            "edgelist" | "edge-list" => Ok(InputFormat::EdgeList),
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            _ => Err(format!(
                "unknown input format {s:?} (auto, edgelist, graph6)"
            )),
        }
    }
}

/// `kind:n`, e.g. `star:5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| format!("family spec {s:?} must look like kind:n, e.g. star:5"))?;
        let kind: FamilyKind = kind
            .parse()
            .map_err(|_| format!("unknown family {kind:?} (star, linear, cycle, complete)"))?;
        let n = n
            .parse()
            .map_err(|_| format!("vertex count {n:?} is not a non-negative integer"))?;
        Ok(FamilySpec { kind, n })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Path(PathBuf),
    Stdin,
    Family(FamilySpec),
}

impl Source {
    /// `-` is stdin, anything else a path.
    pub fn from_arg(arg: &Path) -> Source {
        if arg.as_os_str() == "-" {
            Source::Stdin
        } else {
            Source::Path(arg.to_path_buf())
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Path(p) => write!(f, "{}", p.display()),
            Source::Stdin => f.write_str("<stdin>"),
            Source::Family(spec) => write!(f, "{spec}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{source_name}: {error}")]
    Io {
        source_name: String,
        error: std::io::Error,
    },
    #[error("{source_name}: {error}")]
    EdgeList {
        source_name: String,
        error: EdgeListError,
    },
    #[error("{source_name}: {error}")]
    Graph6 {
        source_name: String,
        error: Graph6Error,
    },
    #[error("{0}")]
    Family(#[from] xchain_core::Error),
}

impl InputError {
    /// The input exceeds a size limit rather than being malformed.
    pub fn is_limit(&self) -> bool {
        match self {
            InputError::EdgeList { error, .. } => {
                matches!(error, EdgeListError::TooManyVertices { .. })
            }
            InputError::Graph6 { error, .. } => {
                matches!(error, Graph6Error::TooManyVertices { .. })
            }
            InputError::Family(e) => e.is_limit(),
            InputError::Io { .. } => false,
        }
    }
}

/// Picks a format from the file extension, else from the content: a graph6
/// header, or a single token made only of graph6 bytes that is not a number.
pub fn detect_format(path: Option<&Path>, text: &str) -> InputFormat {
    let ext = path
        .and_then(|p| p.extension())
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("g6" | "graph6") => return InputFormat::Graph6,
        Some("edges" | "el" | "edgelist") => return InputFormat::EdgeList,
        _ => {}
    }
    let trimmed = text.trim_start();
    if trimmed.starts_with(HEADER) {
        return InputFormat::Graph6;
    }
    let first = trimmed.lines().next().unwrap_or("").trim();
    let looks_g6 = !first.is_empty()
        && !first.contains(char::is_whitespace)
        && !first.starts_with('#')
        && first.bytes().all(|b| (63..=126).contains(&b));
    if looks_g6 {
        InputFormat::Graph6
    } else {
        InputFormat::EdgeList
    }
}

pub fn parse_text(
    text: &str,
    format: InputFormat,
    path: Option<&Path>,
    source_name: &str,
) -> Result<Graph, InputError> {
    let format = match format {
        InputFormat::Auto => detect_format(path, text),
        f => f,
    };
    match format {
        InputFormat::Graph6 => parse_graph6(text).map_err(|error| InputError::Graph6 {
            source_name: source_name.to_string(),
            error,
        }),
        _ => parse_edge_list(text).map_err(|error| InputError::EdgeList {
            source_name: source_name.to_string(),
            error,
        }),
    }
}

pub fn load(source: &Source, format: InputFormat) -> Result<Graph, InputError> {
    let name = source.to_string();
    let io = |error| InputError::Io {
        source_name: name.clone(),
        error,
    };
    match source {
        Source::Family(spec) => Ok(family(spec.kind, spec.n)?),
        Source::Path(p) => {
            let text = std::fs::read_to_string(p).map_err(io)?;
            parse_text(&text, format, Some(p), &name)
        }
        Source::Stdin => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(io)?;
            parse_text(&text, format, None, &name)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        let s: FamilySpec = "star:5".parse().unwrap();
        assert_eq!((s.kind, s.n), (FamilyKind::Star, 5));
        assert_eq!(s.to_string(), "star:5");
        assert!("star".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format(None, "Bw\n"), InputFormat::Graph6);
        assert_eq!(detect_format(None, ">>graph6<<Bw"), InputFormat::Graph6);
        assert_eq!(
            detect_format(None, "3 2\n1 2\n2 3\n"),
            InputFormat::EdgeList
        );
        assert_eq!(detect_format(None, "# c\n3 0\n"), InputFormat::EdgeList);
        assert_eq!(
            detect_format(Some(Path::new("a.g6")), "3 0"),
            InputFormat::Graph6
        );
        assert_eq!(
            detect_format(Some(Path::new("a.edges")), "Bw"),
            InputFormat::EdgeList
        );
    }

    #[test]
    fn explicit_format_wins() {
        let g = parse_text("Bw", InputFormat::Graph6, None, "t").unwrap();
        assert_eq!(g.edge_count(), 3);
        let err = parse_text("Bw", InputFormat::EdgeList, None, "t").unwrap_err();
        assert!(matches!(err, InputError::EdgeList { .. }));
        assert!(err.to_string().starts_with("t: line 1"));
    }

    #[test]
    fn limits_are_flagged() {
        let err = parse_text("5000 0\n", InputFormat::EdgeList, None, "t").unwrap_err();
        assert!(err.is_limit());
        let err = load(
            &Source::Family(FamilySpec {
                kind: FamilyKind::Cycle,
                n: 2,
            }),
            InputFormat::Auto,
        )
        .unwrap_err();
        assert!(!err.is_limit());
    }
}
