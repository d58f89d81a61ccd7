use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{Graph, Label, VertexId};
use crate::kind::GraphKind;

/// Step-by-step configuration of a new [`Graph`].
///
/// Vertices come from exactly one of three specs: a count (ids `0..n-1`), an
/// explicit id list, or a label list (ids `0..n-1` with the labels attached).
///
/// ```
/// use flatgraph::{Graph, GraphBuilder, GraphKind};
/// let g: Graph = GraphBuilder::new(GraphKind::Graph)
///     .num_vertices(3)
///     .edge(0, 1)
///     .edge(1, 2)
///     .build()
///     .unwrap();
/// assert_eq!(g.edge_count(), 2);
/// ```
pub struct GraphBuilder<V = (), E = ()> {
    kind: GraphKind,
    name: Option<String>,
    vertex_spec: VertexSpec<V>,
    edges: Vec<EdgeSpec<E>>,
    expected_degree: Option<usize>,
    bitset_threshold: Option<u32>,
}

enum VertexSpec<V> {
    Count(u32),
    Ids(Vec<VertexId>),
    Labels(Vec<V>),
}

struct EdgeSpec<E> {
    v: VertexId,
    u: VertexId,
    weight: Option<f64>,
    label: Option<E>,
}

impl<V: Label, E: Label> GraphBuilder<V, E> {
    pub fn new(kind: GraphKind) -> Self {
        Self {
            kind,
            name: None,
            vertex_spec: VertexSpec::Count(0),
            edges: Vec::new(),
            expected_degree: None,
            bitset_threshold: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Default vertices `0..n-1`.
    pub fn num_vertices(mut self, n: u32) -> Self {
        self.vertex_spec = VertexSpec::Count(n);
        self
    }

    /// Explicit, distinct vertex ids.
    pub fn vertex_ids(mut self, ids: impl IntoIterator<Item = VertexId>) -> Self {
        self.vertex_spec = VertexSpec::Ids(ids.into_iter().collect());
        self
    }

    /// Vertices `0..n-1`, each labeled with the corresponding entry. This is
    /// the object-modeling flow: index your domain objects, attach them as
    /// labels, and let the numbers do the work.
    pub fn labeled_vertices(mut self, labels: impl IntoIterator<Item = V>) -> Self {
        self.vertex_spec = VertexSpec::Labels(labels.into_iter().collect());
        self
    }

    pub fn edge(mut self, v: VertexId, u: VertexId) -> Self {
        self.edges.push(EdgeSpec {
            v,
            u,
            weight: None,
            label: None,
        });
        self
    }

    pub fn weighted_edge(mut self, v: VertexId, u: VertexId, weight: f64) -> Self {
        self.edges.push(EdgeSpec {
            v,
            u,
            weight: Some(weight),
            label: None,
        });
        self
    }

    pub fn labeled_edge(mut self, v: VertexId, u: VertexId, label: E) -> Self {
        self.edges.push(EdgeSpec {
            v,
            u,
            weight: None,
            label: Some(label),
        });
        self
    }

    /// Expected average degree; sizes the initial adjacency capacity.
    pub fn expect_degree(mut self, degree: usize) -> Self {
        self.expected_degree = Some(degree);
        self
    }

    /// Overrides the adjacency-bitset activation threshold.
    pub fn bitset_threshold(mut self, threshold: u32) -> Self {
        self.bitset_threshold = Some(threshold);
        self
    }

    pub fn build(self) -> Result<Graph<V, E>, GraphError> {
        let mut g = Graph::new(self.kind);
        if let Some(name) = self.name {
            g.set_name(name);
        }
        if let Some(d) = self.expected_degree {
            g.set_adj_capacity_hint(d.max(1));
        }
        g.set_bitset_threshold(self.bitset_threshold);
        match self.vertex_spec {
            VertexSpec::Count(n) => {
                for _ in 0..n {
                    g.add_vertex();
                }
            }
            VertexSpec::Ids(ids) => {
                for id in ids {
                    g.add_vertex_with_id(id)?;
                }
            }
            VertexSpec::Labels(labels) => {
                for label in labels {
                    let v = g.add_vertex();
                    g.set_vertex_label(v, label)?;
                }
            }
        }
        for e in self.edges {
            g.add_edge_full(e.v, e.u, e.weight, e.label)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_by_count() {
        let g: Graph = GraphBuilder::new(GraphKind::Graph)
            .num_vertices(3)
            .named("K3")
            .edge(0, 1)
            .edge(1, 2)
            .edge(0, 2)
            .build()
            .unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.name(), Some("K3"));
        g.check_invariants().unwrap();
    }

    #[test]
    fn empty_build() {
        let g: Graph = GraphBuilder::new(GraphKind::Graph).build().unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = GraphBuilder::<(), ()>::new(GraphKind::Graph)
            .num_vertices(4)
            .edge(0, 1)
            .edge(0, 1)
            .build()
            .unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
    }

    #[test]
    fn duplicate_id_rejected() {
        let err = GraphBuilder::<(), ()>::new(GraphKind::Graph)
            .vertex_ids([3, 3])
            .build()
            .unwrap_err();
        assert_eq!(err, GraphError::DuplicateVertex(3));
    }

    #[test]
    fn unknown_endpoint_rejected() {
        let err = GraphBuilder::<(), ()>::new(GraphKind::Graph)
            .num_vertices(2)
            .edge(0, 5)
            .build()
            .unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex(5));
    }

    #[test]
    fn labeled_flow_assigns_sequential_ids() {
        let mut g: Graph<&'static str> = GraphBuilder::new(GraphKind::Graph)
            .labeled_vertices(["Iasi", "Cluj", "Timisoara"])
            .edge(0, 1)
            .build()
            .unwrap();
        assert_eq!(g.vertex_label(2), Some(&"Timisoara"));
        assert_eq!(g.find_vertex(&"Cluj"), Some(1));
    }

    #[test]
    fn weighted_edges_materialize_weights() {
        let g: Graph = GraphBuilder::new(GraphKind::Graph)
            .num_vertices(2)
            .weighted_edge(0, 1, 2.5)
            .build()
            .unwrap();
        assert_eq!(g.edge_weight(0, 1), 2.5);
    }
}
