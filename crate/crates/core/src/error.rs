use thiserror::Error;

use crate::graph::FamilyKind;

/// Errors raised by graph construction and the analyses built on it.
///
/// Vertex indices are stored 0-based and displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {} out of range for a graph on {n} vertices", vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("self-loop at vertex {}", vertex + 1)]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {}-{}", u + 1, v + 1)]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex counts differ ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("{family} graph is not defined on {n} vertices")]
    InvalidFamilySize { family: FamilyKind, n: usize },
    #[error("vertex set {chain} is not an Euler chain")]
    NotEulerChain {
        chain: alloc::boxed::Box<crate::VertexSet>,
    },
    #[error("brute-force LHV sweep limited to {max} vertices, graph has {n}")]
    BruteForceTooLarge { n: usize, max: usize },
    #[error("statevector oracle limited to {max} qubits, graph has {n}")]
    OracleTooLarge { n: usize, max: usize },
}

impl Error {
    /// True for errors caused by a size cap rather than malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::TooManyVertices { .. }
                | Error::BruteForceTooLarge { .. }
                | Error::OracleTooLarge { .. }
        )
    }
}
