use crate::graph::{Slot, VertexId};

/// A transient view of one edge.
///
/// Edges are not stored as objects anywhere; handles are assembled on demand
/// from the adjacency columns. `slot`, when present, names the adjacency cell
/// the handle was read from: `(owner vertex, index in the owner's list)`.
/// A handle is a snapshot — it is not tracked across later mutations.
#[derive(Clone, Debug)]
pub struct EdgeHandle<E = ()> {
    pub directed: bool,
    pub source: VertexId,
    pub target: VertexId,
    pub weight: Option<f64>,
    pub label: Option<E>,
    pub slot: Option<(VertexId, Slot)>,
}

impl<E> EdgeHandle<E> {
    pub fn new(directed: bool, source: VertexId, target: VertexId) -> Self {
        Self {
            directed,
            source,
            target,
            weight: None,
            label: None,
            slot: None,
        }
    }

    /// Endpoints in canonical order: as-is for directed handles,
    /// `(min, max)` for undirected ones.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        if self.directed || self.source <= self.target {
            (self.source, self.target)
        } else {
            (self.target, self.source)
        }
    }

    /// The weight, defaulting to `1.0` for edges of never-weighted graphs.
    pub fn weight_or_default(&self) -> f64 {
        self.weight.unwrap_or(1.0)
    }

    pub fn is_self_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Undirected handles compare equal under endpoint swap; weights, labels and
/// slots do not take part in equality.
impl<E> PartialEq for EdgeHandle<E> {
    fn eq(&self, other: &Self) -> bool {
        self.directed == other.directed && self.endpoints() == other.endpoints()
    }
}

impl<E> Eq for EdgeHandle<E> {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_handles_ignore_endpoint_order() {
        let a: EdgeHandle = EdgeHandle::new(false, 1, 5);
        let b: EdgeHandle = EdgeHandle::new(false, 5, 1);
        assert_eq!(a, b);
        let c: EdgeHandle = EdgeHandle::new(true, 1, 5);
        let d: EdgeHandle = EdgeHandle::new(true, 5, 1);
        assert_ne!(c, d);
    }
}
