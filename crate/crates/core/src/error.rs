use alloc::string::String;
use core::fmt;

use crate::concepts::Cycle;
use crate::graph::VertexId;

/// Errors reported by graph mutation, construction and algorithm entry points.
///
/// Read-only accessors treat an unknown vertex or a kind mismatch as a
/// contract violation and panic instead; only recoverable conditions surface
/// here.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    DuplicateVertex(VertexId),
    UnknownVertex(VertexId),
    /// Vertex ids (and therefore vertex counts) are limited to `i32::MAX`.
    VertexLimitExceeded,
    /// The kind forbids multiple edges and the edge is already present.
    DuplicateEdge(VertexId, VertexId),
    SelfLoopNotAllowed(VertexId),
    UnknownEdge(VertexId, VertexId),
    /// The operation requires a different graph kind, e.g. predecessors of an
    /// undirected graph.
    KindMismatch {
        required: &'static str,
    },
    /// A negative edge weight where the algorithm forbids one.
    NegativeWeight(f64),
    /// A negative cycle makes the requested distances undefined.
    NegativeCycle,
    NotBipartite(Cycle),
    CyclicGraph(Cycle),
    NotEulerian(NotEulerianReason),
    SourceIsSink(VertexId),
    /// Generator or transform parameters out of range.
    InvalidParameter(String),
    /// A dense representation would overflow the address space.
    SizeOverflow,
}

/// Why a graph has no Eulerian circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotEulerianReason {
    NoEdges,
    /// The non-isolated vertices are not all in one component.
    Disconnected,
    /// An odd-degree vertex (undirected case).
    OddDegree(VertexId),
    /// A vertex whose indegree differs from its outdegree (directed case).
    DegreeImbalance(VertexId),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(v) => write!(f, "vertex {v} already present"),
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::VertexLimitExceeded => {
                write!(f, "vertex ids are limited to {}", i32::MAX)
            }
            GraphError::DuplicateEdge(v, u) => {
                write!(f, "edge {v}-{u} already present and kind forbids multiple edges")
            }
            GraphError::SelfLoopNotAllowed(v) => {
                write!(f, "self-loop at {v} not allowed by this kind")
            }
            GraphError::UnknownEdge(v, u) => write!(f, "no edge {v}-{u}"),
            GraphError::KindMismatch { required } => {
                write!(f, "operation requires a {required} graph")
            }
            GraphError::NegativeWeight(w) => write!(f, "negative weight {w}"),
            GraphError::NegativeCycle => write!(f, "graph contains a negative cycle"),
            GraphError::NotBipartite(c) => {
                write!(f, "graph is not bipartite (odd cycle of length {})", c.len())
            }
            GraphError::CyclicGraph(c) => {
                write!(f, "digraph contains a cycle of length {}", c.len())
            }
            GraphError::NotEulerian(reason) => write!(f, "not eulerian: {reason}"),
            GraphError::SourceIsSink(v) => write!(f, "source and sink are both {v}"),
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::SizeOverflow => write!(f, "dense representation too large"),
        }
    }
}

impl fmt::Display for NotEulerianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotEulerianReason::NoEdges => write!(f, "graph has no edges"),
            NotEulerianReason::Disconnected => {
                write!(f, "edges span more than one connected component")
            }
            NotEulerianReason::OddDegree(v) => write!(f, "vertex {v} has odd degree"),
            NotEulerianReason::DegreeImbalance(v) => {
                write!(f, "vertex {v} has indegree != outdegree")
            }
        }
    }
}

impl core::error::Error for GraphError {}
