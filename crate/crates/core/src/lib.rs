//! Graph data structures and algorithms backed by flat primitive-integer columns.
//!
//! Instead of one heap object per vertex or edge, a [`Graph`] keeps its data in
//! columns: a dense vertex array, per-vertex neighbor and mirror-position
//! arrays, and lazily created side columns for weights, labels and adjacency
//! bitsets. Edges never exist as stored objects; an [`EdgeHandle`] is a
//! transient view assembled on demand. This keeps the memory footprint at a
//! few machine words per vertex and per edge and makes the classic algorithms
//! in [`algo`] fast by construction.
//!
//! The crate is `no_std` (it requires `alloc`). Everything that needs an
//! operating system — file formats, the benchmark harness, the CLI — lives in
//! the companion `flatgraph-cli` crate.
//!
//! ```
//! use flatgraph::{Graph, GraphBuilder, GraphKind};
//!
//! let g: Graph = GraphBuilder::new(GraphKind::Graph)
//!     .num_vertices(3)
//!     .named("K3")
//!     .edge(0, 1)
//!     .edge(1, 2)
//!     .edge(0, 2)
//!     .build()
//!     .unwrap();
//! assert_eq!(g.vertex_count(), 3);
//! assert_eq!(g.edge_count(), 3);
//! assert!(g.contains_edge(0, 2));
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algo;
mod bits;
mod builder;
pub mod collections;
mod concepts;
mod edge;
mod error;
pub mod generate;
mod graph;
mod kind;
mod memory;
pub mod transform;
pub mod traverse;

pub use bits::Bitset;
pub use builder::GraphBuilder;
pub use concepts::{Clique, Cycle, Matching, Path, StableSet};
pub use edge::EdgeHandle;
pub use error::GraphError;
pub use graph::{Graph, NeighborCursor, Slot, VertexId, MAX_VERTEX_ID};
pub use kind::GraphKind;
pub use memory::{BitsetFigure, MemberBytes, MemoryModel};
