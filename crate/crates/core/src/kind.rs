/// The six graph kinds: every combination of direction, multiple edges and
/// self-loops, where allowing self-loops implies allowing multiple edges
/// (a pseudograph extends a multigraph).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Simple undirected graph.
    Graph,
    /// Simple directed graph.
    Digraph,
    /// Undirected, multiple edges allowed.
    Multigraph,
    /// Directed, multiple edges allowed.
    DirectedMultigraph,
    /// Undirected, multiple edges and self-loops allowed.
    Pseudograph,
    /// Directed, multiple edges and self-loops allowed.
    DirectedPseudograph,
}

impl GraphKind {
    pub const ALL: [GraphKind; 6] = [
        GraphKind::Graph,
        GraphKind::Digraph,
        GraphKind::Multigraph,
        GraphKind::DirectedMultigraph,
        GraphKind::Pseudograph,
        GraphKind::DirectedPseudograph,
    ];

    /// The kind with the given feature flags, or `None` for the two illegal
    /// combinations (self-loops without multiple edges).
    pub fn from_flags(directed: bool, multi_edges: bool, self_loops: bool) -> Option<Self> {
        match (directed, multi_edges, self_loops) {
            (false, false, false) => Some(GraphKind::Graph),
            (true, false, false) => Some(GraphKind::Digraph),
            (false, true, false) => Some(GraphKind::Multigraph),
            (true, true, false) => Some(GraphKind::DirectedMultigraph),
            (false, true, true) => Some(GraphKind::Pseudograph),
            (true, true, true) => Some(GraphKind::DirectedPseudograph),
            (_, false, true) => None,
        }
    }

    #[inline]
    pub fn is_directed(self) -> bool {
        matches!(
            self,
            GraphKind::Digraph | GraphKind::DirectedMultigraph | GraphKind::DirectedPseudograph
        )
    }

    #[inline]
    pub fn allows_multi_edges(self) -> bool {
        !matches!(self, GraphKind::Graph | GraphKind::Digraph)
    }

    #[inline]
    pub fn allows_self_loops(self) -> bool {
        matches!(self, GraphKind::Pseudograph | GraphKind::DirectedPseudograph)
    }

    /// True for `Graph`: undirected, no multi-edges, no loops.
    #[inline]
    pub fn is_simple_undirected(self) -> bool {
        matches!(self, GraphKind::Graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_round_trip() {
        for kind in GraphKind::ALL {
            let back = GraphKind::from_flags(
                kind.is_directed(),
                kind.allows_multi_edges(),
                kind.allows_self_loops(),
            );
            assert_eq!(back, Some(kind));
        }
        // self-loops without multi-edges is not a kind
        assert_eq!(GraphKind::from_flags(false, false, true), None);
        assert_eq!(GraphKind::from_flags(true, false, true), None);
    }

    #[test]
    fn loops_imply_multi_edges() {
        for kind in GraphKind::ALL {
            if kind.allows_self_loops() {
                assert!(kind.allows_multi_edges());
            }
        }
    }
}
