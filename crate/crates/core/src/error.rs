//! Error type shared across the crate.

use core::fmt;

/// Everything that can go wrong while building graphs or running the
/// coloring routines. Variants carry a witness (vertex, edge, or color)
/// whenever there is a natural one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered vertex pair appears twice in an edge list.
    DuplicateEdge { u: usize, v: usize },
    /// A side assignment has the wrong length for the graph.
    PartitionSizeMismatch { expected: usize, got: usize },
    /// An edge has both endpoints on the same side of a claimed bipartition.
    EdgeInsidePart { u: usize, v: usize },
    /// A vertex is missing from, or repeated in, a claimed vertex partition.
    NotAPartition { vertex: usize },
    /// Two clique vertices of a claimed split decomposition are non-adjacent.
    MissingCliqueEdge { u: usize, v: usize },
    /// Two independent-set vertices of a claimed split decomposition are adjacent.
    EdgeInsideIndependentSet { u: usize, v: usize },
    /// A coloring has a different number of entries than the graph has edges.
    ColoringSizeMismatch { edges: usize, colors: usize },
    /// An edge carries a color outside the permitted range `1..=limit`.
    ColorOutOfRange { edge: usize, color: u32, limit: u32 },
    /// Two adjacent edges carry the same color.
    ImproperColoring { first: usize, second: usize },
    /// The operation requires a regular graph and the degrees disagree.
    NotRegular,
    /// The operation requires at least one edge.
    NoEdges,
    /// An edge violates the required degree dominance `d(u) >= d(w)`.
    DominanceViolated { u: usize, w: usize },
    /// An edge between clique vertex `u` and independent vertex `v` violates
    /// the degree condition of the requested split bound.
    ConditionViolated { u: usize, v: usize },
    /// Neither split degree condition holds for the decomposition.
    NoConditionHolds,
    /// An internal invariant failed; this is a bug, not a caller error.
    Internal(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::PartitionSizeMismatch { expected, got } => {
                write!(f, "partition describes {got} vertices, graph has {expected}")
            }
            Error::EdgeInsidePart { u, v } => {
                write!(f, "edge ({u}, {v}) stays within one side of the bipartition")
            }
            Error::NotAPartition { vertex } => {
                write!(f, "vertex {vertex} is not covered exactly once by the partition")
            }
            Error::MissingCliqueEdge { u, v } => {
                write!(f, "clique vertices {u} and {v} are not adjacent")
            }
            Error::EdgeInsideIndependentSet { u, v } => {
                write!(f, "independent-set vertices {u} and {v} are adjacent")
            }
            Error::ColoringSizeMismatch { edges, colors } => {
                write!(f, "coloring has {colors} entries for {edges} edges")
            }
            Error::ColorOutOfRange { edge, color, limit } => {
                write!(f, "edge {edge} has color {color}, outside 1..={limit}")
            }
            Error::ImproperColoring { first, second } => {
                write!(f, "adjacent edges {first} and {second} share a color")
            }
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::NoEdges => write!(f, "graph has no edges"),
            Error::DominanceViolated { u, w } => {
                write!(f, "edge ({u}, {w}) violates degree dominance d({u}) >= d({w})")
            }
            Error::ConditionViolated { u, v } => {
                write!(f, "edge ({u}, {v}) violates the requested split degree condition")
            }
            Error::NoConditionHolds => {
                write!(f, "neither split degree condition holds for this decomposition")
            }
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
