//! Graph-theoretic concepts with validity checks.
//!
//! Algorithms return these instead of raw id lists so that results read like
//! the theory and can assert their own consistency: a returned stable set can
//! finish with `debug_assert!(s.is_valid(&g))`. Every check returns `false`
//! for vertices that are not in the graph rather than panicking.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::collections::{EdgeSet, VertexList, VertexSet};
use crate::graph::{Graph, Label, VertexId};

fn adjacent<V: Label, E: Label>(g: &Graph<V, E>, v: VertexId, u: VertexId) -> bool {
    if g.is_directed() {
        g.contains_edge(v, u) || g.contains_edge(u, v)
    } else {
        g.contains_edge(v, u)
    }
}

/// A walk without repeated vertices: consecutive entries are adjacent
/// (following arc direction in directed graphs).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Path {
    vertices: VertexList,
}

impl Path {
    pub fn new(vertices: impl Into<VertexList>) -> Self {
        Self {
            vertices: vertices.into(),
        }
    }

    pub fn vertices(&self) -> &VertexList {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Total weight of the traversed edges.
    pub fn weight<V: Label, E: Label>(&self, g: &Graph<V, E>) -> f64 {
        self.vertices
            .as_slice()
            .windows(2)
            .map(|w| g.edge_weight(w[0], w[1]))
            .sum()
    }

    pub fn is_valid<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        let vs = self.vertices.as_slice();
        if vs.is_empty() {
            return false;
        }
        if vs.iter().any(|&v| !g.contains_vertex(v)) {
            return false;
        }
        let mut seen = VertexSet::new();
        if !vs.iter().all(|&v| seen.add(v)) {
            return false;
        }
        vs.windows(2).all(|w| g.contains_edge(w[0], w[1]))
    }
}

/// A closed sequence of distinct vertices; the last entry connects back to
/// the first. The closing edge is implicit, not repeated in the sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cycle {
    vertices: VertexList,
}

impl Cycle {
    pub fn new(vertices: impl Into<VertexList>) -> Self {
        Self {
            vertices: vertices.into(),
        }
    }

    pub fn vertices(&self) -> &VertexList {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Validity as a simple cycle: distinct vertices, consecutive adjacency
    /// and a closing edge. A length-1 cycle needs a self-loop; an undirected
    /// length-2 cycle needs a parallel pair.
    pub fn is_valid<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        let vs = self.vertices.as_slice();
        if vs.is_empty() || vs.iter().any(|&v| !g.contains_vertex(v)) {
            return false;
        }
        let mut seen = VertexSet::new();
        if !vs.iter().all(|&v| seen.add(v)) {
            return false;
        }
        match vs.len() {
            1 => g.kind().allows_self_loops() && g.contains_edge(vs[0], vs[0]),
            2 if !g.is_directed() => g.multiplicity(vs[0], vs[1]) >= 2,
            _ => {
                vs.windows(2).all(|w| g.contains_edge(w[0], w[1]))
                    && g.contains_edge(vs[vs.len() - 1], vs[0])
            }
        }
    }

    /// Validity as a closed walk: consecutive adjacency and closure, with
    /// vertex repeats allowed. Eulerian circuits are closed walks.
    pub fn is_closed_walk<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        let vs = self.vertices.as_slice();
        if vs.is_empty() || vs.iter().any(|&v| !g.contains_vertex(v)) {
            return false;
        }
        vs.windows(2).all(|w| g.contains_edge(w[0], w[1]))
            && g.contains_edge(vs[vs.len() - 1], vs[0])
    }

    /// The traversed edges as endpoint pairs, including the closing edge.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let vs = self.vertices.as_slice();
        let mut out: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        if !vs.is_empty() {
            out.push((vs[vs.len() - 1], vs[0]));
        }
        out
    }
}

/// A set of pairwise non-adjacent vertices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StableSet {
    vertices: VertexSet,
}

impl StableSet {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        if self.vertices.iter().any(|v| !g.contains_vertex(v)) {
            return false;
        }
        // every edge among members shows up in some member's list
        self.vertices.iter().all(|v| {
            g.neighbors_of(v)
                .iter()
                .all(|&u| u == v || !self.vertices.contains(u))
        })
    }
}

/// A set of pairwise adjacent vertices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Clique {
    vertices: VertexSet,
}

impl Clique {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        if self.vertices.iter().any(|v| !g.contains_vertex(v)) {
            return false;
        }
        let members = self.vertices.as_slice();
        for (i, &v) in members.iter().enumerate() {
            for &u in &members[i + 1..] {
                if !adjacent(g, v, u) {
                    return false;
                }
            }
        }
        true
    }
}

/// A set of vertex-disjoint edges, with a mate map for O(1) partner lookup.
#[derive(Clone, Debug)]
pub struct Matching {
    edges: EdgeSet,
    mates: HashMap<VertexId, VertexId>,
}

impl Default for Matching {
    fn default() -> Self {
        Self::new()
    }
}

impl Matching {
    pub fn new() -> Self {
        Self {
            edges: EdgeSet::new_undirected(),
            mates: HashMap::new(),
        }
    }

    /// Adds the edge `vu`; false if it would share a vertex with the matching.
    pub fn add(&mut self, v: VertexId, u: VertexId) -> bool {
        if v == u || self.mates.contains_key(&v) || self.mates.contains_key(&u) {
            return false;
        }
        self.edges.add(v, u);
        self.mates.insert(v, u);
        self.mates.insert(u, v);
        true
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mates.get(&v).copied()
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mates.contains_key(&v)
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid<V: Label, E: Label>(&self, g: &Graph<V, E>) -> bool {
        let mut used = VertexSet::new();
        for (v, u) in self.edges.iter() {
            if !g.contains_vertex(v) || !g.contains_vertex(u) {
                return false;
            }
            if !adjacent(g, v, u) {
                return false;
            }
            if !used.add(v) || !used.add(u) {
                return false;
            }
        }
        true
    }
}
