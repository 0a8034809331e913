//! Simple undirected graphs and the four standard families.

use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::Error;
use crate::gf2::BitMatrix;

/// A simple undirected graph on vertices `0..n`.
///
/// Stored as one neighbourhood set per vertex. No self-loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    neighbors: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("graph too large")
    }

    pub fn try_new(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            neighbors: (0..n).map(|_| VertexSet::empty(n)).collect(),
            edges: 0,
        })
    }

    /// Builds a graph from 0-based edge pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::try_new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}` (0-based).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if self.neighbors[u].contains(v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.neighbors[u].insert(v);
        self.neighbors[v].insert(u);
        self.edges += 1;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.neighbors[u].contains(v)
    }

    /// Neighbourhood `N_v`.
    ///
    /// # Panics
    /// If `v >= n`. See [`neighborhood`] for the checked form.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn adjacency_matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n(), &self.neighbors)
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.neighbors[v].intersection_len(s))
            .sum::<usize>()
            / 2
    }

    /// Degree of `v` inside the subgraph induced by `s`.
    #[inline]
    pub fn induced_degree(&self, s: &VertexSet, v: usize) -> usize {
        self.neighbors[v].intersection_len(s)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(n, 0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(n);
            for v in frontier.iter() {
                next = next.union(&self.neighbors[v]);
            }
            frontier = next.difference(&seen);
            seen = seen.union(&next);
        }
        seen.len() == n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        f.write_str("])")
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), Error> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        })
    }
}

pub(crate) fn check_subset(g: &Graph, s: &VertexSet) -> Result<(), Error> {
    if s.universe() == g.n() {
        Ok(())
    } else {
        Err(Error::VertexCountMismatch {
            left: g.n(),
            right: s.universe(),
        })
    }
}

/// `N_v`, checked.
pub fn neighborhood(g: &Graph, v: usize) -> Result<VertexSet, Error> {
    check_vertex(g, v)?;
    Ok(g.neighbors[v])
}

/// The subgraph induced by `s`, relabelled onto `0..|s|` in ascending order.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph, Error> {
    check_subset(g, s)?;
    let keep: Vec<usize> = s.iter().collect();
    let mut h = Graph::new(keep.len());
    for (a, &u) in keep.iter().enumerate() {
        for (b, &v) in keep.iter().enumerate().skip(a + 1) {
            if g.has_edge(u, v) {
                h.add_edge(a, b)?;
            }
        }
    }
    Ok(h)
}

/// `(V, E_G Δ E_H)`.
pub fn graph_symmetric_difference(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    if g.n() != h.n() {
        return Err(Error::VertexCountMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    let neighbors: Vec<VertexSet> = g
        .neighbors
        .iter()
        .zip(&h.neighbors)
        .map(|(a, b)| a.symmetric_difference(b))
        .collect();
    let edges = neighbors.iter().map(VertexSet::len).sum::<usize>() / 2;
    Ok(Graph { neighbors, edges })
}

/// The graph families with closed-form X-chain groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `S_n`: centre vertex 1 joined to leaves `2..n`.
    Star,
    /// `L_n`: the path `1-2-...-n`.
    Linear,
    /// `C_n`: the cycle `1-2-...-n-1`.
    Cycle,
    /// `K_n`: all pairs.
    Complete,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Star,
        FamilyKind::Linear,
        FamilyKind::Cycle,
        FamilyKind::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Star => "star",
            FamilyKind::Linear => "linear",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
        }
    }

    pub fn min_vertices(self) -> usize {
        match self {
            FamilyKind::Cycle => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(UnknownFamily)
    }
}

/// Returned when a family name is not one of `star`, `linear`, `cycle`, `complete`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownFamily;

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown graph family (expected star, linear, cycle or complete)")
    }
}

impl core::error::Error for UnknownFamily {}

/// Member of a standard family on `n` vertices, labelled as in the usual
/// tables: vertex 1 (index 0) is the star centre, paths and cycles run in
/// label order.
pub fn family(kind: FamilyKind, n: usize) -> Result<Graph, Error> {
    if n < kind.min_vertices() {
        return Err(Error::InvalidFamilySize { family: kind, n });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let edges: Vec<(usize, usize)> = match kind {
        FamilyKind::Star => (1..n).map(|v| (0, v)).collect(),
        FamilyKind::Linear => (1..n).map(|v| (v - 1, v)).collect(),
        FamilyKind::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        FamilyKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
    };
    Graph::from_edges(n, edges)
}
