//! The byte-count model of a graph's column layout.
//!
//! The model prices each member as laid out by the columnar representation:
//! 4 bytes per `i32` cell, 8 per `f64`, 4 per object reference, with the
//! per-vertex arrays contributing one header reference each. It is a model of
//! that layout, not a probe of the running process's heap. Reference totals
//! for common shapes, with default vertices:
//!
//! * simple unweighted undirected: `16n + 16m`
//! * edge-weighted undirected: `20n + 32m`
//! * simple directed: `24n + 12m`
//! * edge-weighted directed: `28n + 20m`

use alloc::vec::Vec;

use crate::graph::{Graph, Label};
use crate::kind::GraphKind;

/// One priced member of the layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemberBytes {
    pub member: &'static str,
    pub bytes: u64,
}

/// Which figure the bitset row uses: the aggregate `m`-byte estimate that
/// holds under the activation threshold, or the summed words of the actually
/// active per-vertex bitsets — whichever is smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BitsetFigure {
    Aggregate,
    PerVertex,
}

/// Which lazy members exist, as input to the closed-form model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ActiveMembers {
    pub vertex_weights: bool,
    pub vertex_labels: bool,
    pub edge_weights: bool,
    pub edge_labels: bool,
    /// Number of vertices with an active adjacency bitset.
    pub bitset_vertices: u64,
    /// Total bytes of the active bitsets' words. When building the model
    /// without a live graph, pass `bitset_vertices * ceil(n/64) * 8`.
    pub bitset_bytes: u64,
    pub vertex_index: bool,
    pub label_to_vertex: bool,
    pub label_to_edge: bool,
}

/// Modeled byte counts for every active member of a graph's layout.
#[derive(Clone, Debug, PartialEq)]
pub struct MemoryModel {
    pub directed: bool,
    pub vertex_count: u64,
    pub edge_count: u64,
    rows: Vec<MemberBytes>,
    /// Both bitset figures, when any bitset is active.
    pub bitset_aggregate: Option<u64>,
    pub bitset_per_vertex: Option<u64>,
    pub bitset_figure: Option<BitsetFigure>,
}

impl MemoryModel {
    /// Model for a live graph, from its actual active members.
    pub fn of<V: Label, E: Label>(g: &Graph<V, E>) -> Self {
        Self::model(
            g.kind(),
            g.vertex_count() as u64,
            g.edge_count(),
            g.active_members(),
        )
    }

    /// Closed-form model for a graph of the given shape.
    pub fn model(kind: GraphKind, n: u64, m: u64, active: ActiveMembers) -> Self {
        let directed = kind.is_directed();
        let mut rows = Vec::new();
        let mut row = |member, bytes| rows.push(MemberBytes { member, bytes });
        row("vertices", 4 * n);
        if directed {
            row("indegrees", 4 * n);
            row("outdegrees", 4 * n);
            row("successors", 4 * n + 4 * m);
            row("predecessors", 4 * n + 4 * m);
            row("predecessor positions", 4 * n + 4 * m);
        } else {
            row("degrees", 4 * n);
            row("neighbors", 4 * n + 8 * m);
            row("positions", 4 * n + 8 * m);
        }
        if active.vertex_weights {
            row("vertex weights", 8 * n);
        }
        if active.vertex_labels {
            row("vertex labels", 4 * n);
        }
        if active.edge_weights {
            // one 8-byte copy per arc; two mirrored copies per undirected edge
            row("edge weights", 4 * n + if directed { 8 * m } else { 16 * m });
        }
        if active.edge_labels {
            row("edge labels", 4 * n + if directed { 4 * m } else { 8 * m });
        }
        let (mut aggregate, mut per_vertex, mut figure) = (None, None, None);
        if active.bitset_vertices > 0 {
            aggregate = Some(m);
            per_vertex = Some(active.bitset_bytes);
            figure = Some(if m <= active.bitset_bytes {
                BitsetFigure::Aggregate
            } else {
                BitsetFigure::PerVertex
            });
            row("adjacency bitset", m.min(active.bitset_bytes));
        }
        if active.vertex_index {
            row("vertex-to-index map", 4 * n);
        }
        if active.label_to_vertex {
            row("label-to-vertex map", 20 * n);
        }
        if active.label_to_edge {
            row("label-to-edge map", 4 * n + 104 * m);
        }
        Self {
            directed,
            vertex_count: n,
            edge_count: m,
            rows,
            bitset_aggregate: aggregate,
            bitset_per_vertex: per_vertex,
            bitset_figure: figure,
        }
    }

    /// Per-member breakdown, active members only.
    pub fn rows(&self) -> &[MemberBytes] {
        &self.rows
    }

    /// Total modeled bytes across active members.
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.bytes).sum()
    }

    /// Total with the bitset priced at the aggregate `m`-byte figure, the
    /// estimate that applies under the default activation threshold.
    pub fn total_aggregate_bitset(&self) -> u64 {
        match (self.bitset_aggregate, self.bitset_per_vertex) {
            (Some(agg), Some(pv)) => self.total() - agg.min(pv) + agg,
            _ => self.total(),
        }
    }
}
