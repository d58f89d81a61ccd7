use alloc::string::String;
use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::bits::Bitset;
use crate::edge::EdgeHandle;
use crate::error::GraphError;
use crate::kind::GraphKind;

/// Vertices are plain non-negative integers.
pub type VertexId = u32;

/// Index of a cell inside a per-vertex adjacency list.
pub type Slot = u32;

/// Largest usable vertex id (and vertex count), the 32-bit signed maximum.
pub const MAX_VERTEX_ID: VertexId = i32::MAX as u32;

/// Weight reported for vertices and edges whose weight column was never
/// created. With it, shortest paths on unweighted graphs degenerate to hop
/// counts.
pub const DEFAULT_WEIGHT: f64 = 1.0;

/// Bound for vertex and edge labels: cloneable and usable as a hash key.
pub trait Label: Clone + Eq + Hash {}
impl<T: Clone + Eq + Hash> Label for T {}

const INITIAL_ADJ_CAPACITY: usize = 8;

/// Pushes with the 1.5x growth policy: when full, the array grows by half of
/// its current size (rounded up), starting from `first` slots.
#[inline]
fn grow_push<T>(vec: &mut Vec<T>, value: T, first: usize) {
    if vec.len() == vec.capacity() {
        let extra = if vec.capacity() == 0 {
            first.max(1)
        } else {
            vec.capacity().div_ceil(2)
        };
        vec.reserve_exact(extra);
    }
    vec.push(value);
}

/// A mutable graph stored as columns of primitive values.
///
/// Per-vertex data lives in dense arrays indexed by *internal position*;
/// `vertices[p]` gives the id of the vertex at position `p`. For every vertex
/// there is an adjacency list (neighbors, or successors when directed) and,
/// undirected, a parallel `positions` list: `positions[p][s]` is the slot of
/// this vertex inside the adjacency list of `adjacency[p][s]`, which makes
/// mirror updates O(1). Directed graphs keep successor and predecessor lists
/// plus predecessor positions pointing back into the successor lists.
///
/// Weight, label and adjacency-bitset columns, and the id/label lookup maps,
/// are created lazily on first use. A self-loop occupies two mirrored cells
/// of its vertex's list (so it contributes 2 to the degree) in undirected
/// kinds, and one successor plus one predecessor cell in directed kinds.
///
/// `V` and `E` are the vertex and edge label types.
#[derive(Clone)]
pub struct Graph<V = (), E = ()> {
    kind: GraphKind,
    name: Option<String>,
    vertices: Vec<VertexId>,
    /// Neighbor lists; successor lists when directed.
    adjacency: Vec<Vec<VertexId>>,
    /// Undirected only: mirror slots, parallel to `adjacency`.
    positions: Vec<Vec<Slot>>,
    /// Directed only.
    predecessors: Vec<Vec<VertexId>>,
    /// Directed only: `pred_positions[p][s]` is the slot of this vertex in
    /// the successor list of `predecessors[p][s]`.
    pred_positions: Vec<Vec<Slot>>,
    vertex_weights: Option<Vec<f64>>,
    vertex_labels: Option<Vec<Option<V>>>,
    /// Parallel to `adjacency`; mirrored across both cells when undirected.
    edge_weights: Option<Vec<Vec<f64>>>,
    edge_labels: Option<Vec<Vec<Option<E>>>>,
    /// Per-vertex adjacency bitsets keyed by neighbor id, activated when a
    /// vertex's degree reaches the threshold.
    bitsets: Option<Vec<Option<Bitset>>>,
    /// Id -> position map, absent while `vertices[p] == p` for all p.
    vertex_index: Option<HashMap<VertexId, u32>>,
    label_to_vertex: Option<HashMap<V, VertexId>>,
    /// Label -> (owner id, slot in the owner's adjacency list).
    label_to_edge: Option<HashMap<E, (VertexId, Slot)>>,
    /// Pseudograph kinds: per-vertex self-loop counts.
    self_loops: Option<HashMap<VertexId, u32>>,
    num_edges: u64,
    next_id: VertexId,
    /// User override for the bitset activation threshold (default ceil(sqrt n)).
    bitset_threshold: Option<u32>,
    adj_capacity_hint: usize,
    /// Structural modification counter; iterators fail fast on it in debug
    /// builds.
    mods: u64,
    /// Cumulative count of adjacency cells relocated by swap-removal, kept as
    /// evidence that removals do O(1) work.
    cells_moved: u64,
}

impl<V, E> core::fmt::Debug for Graph<V, E> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("kind", &self.kind)
            .field("name", &self.name)
            .field("n", &self.vertices.len())
            .field("m", &self.num_edges)
            .finish_non_exhaustive()
    }
}

impl<V: Label, E: Label> Graph<V, E> {
    pub fn new(kind: GraphKind) -> Self {
        Self {
            kind,
            name: None,
            vertices: Vec::new(),
            adjacency: Vec::new(),
            positions: Vec::new(),
            predecessors: Vec::new(),
            pred_positions: Vec::new(),
            vertex_weights: None,
            vertex_labels: None,
            edge_weights: None,
            edge_labels: None,
            bitsets: None,
            vertex_index: None,
            label_to_vertex: None,
            label_to_edge: None,
            self_loops: None,
            num_edges: 0,
            next_id: 0,
            bitset_threshold: None,
            adj_capacity_hint: INITIAL_ADJ_CAPACITY,
            mods: 0,
            cells_moved: 0,
        }
    }

    // ------------------------------------------------------------------
    // Basic inspection
    // ------------------------------------------------------------------

    #[inline]
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.kind.is_directed()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges as a 64-bit count; parallel edges count separately and
    /// a self-loop counts once.
    #[inline]
    pub fn edge_count(&self) -> u64 {
        self.num_edges
    }

    /// The dense vertex column, in internal position order.
    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    #[inline]
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Internal position of vertex `v`, if present.
    #[inline]
    pub fn index_of(&self, v: VertexId) -> Option<u32> {
        match &self.vertex_index {
            Some(map) => map.get(&v).copied(),
            // without the map, vertices[p] == p
            None => ((v as usize) < self.vertices.len()).then_some(v),
        }
    }

    /// Vertex id at internal position `p`. Panics if out of range.
    #[inline]
    pub fn vertex_at(&self, p: u32) -> VertexId {
        self.vertices[p as usize]
    }

    #[inline]
    fn require(&self, v: VertexId) -> Result<usize, GraphError> {
        self.index_of(v)
            .map(|p| p as usize)
            .ok_or(GraphError::UnknownVertex(v))
    }

    #[inline]
    fn expect(&self, v: VertexId) -> usize {
        self.index_of(v)
            .unwrap_or_else(|| panic!("unknown vertex {v}")) as usize
    }

    // ------------------------------------------------------------------
    // Vertex mutation
    // ------------------------------------------------------------------

    /// Appends a vertex with the next default id and returns the id. Ids are
    /// never reused: the default-id counter only moves forward.
    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.next_id;
        self.add_vertex_with_id(id)
            .expect("default vertex id cannot collide")
    }

    /// Appends a vertex with an explicit id. Using an id other than the next
    /// default one materializes the id-to-position map.
    pub fn add_vertex_with_id(&mut self, v: VertexId) -> Result<VertexId, GraphError> {
        if v > MAX_VERTEX_ID || self.vertices.len() >= MAX_VERTEX_ID as usize {
            return Err(GraphError::VertexLimitExceeded);
        }
        if self.contains_vertex(v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        let p = self.vertices.len() as u32;
        if self.vertex_index.is_none() && v != p {
            self.materialize_vertex_index();
        }
        if let Some(map) = &mut self.vertex_index {
            map.insert(v, p);
        }
        grow_push(&mut self.vertices, v, 1);
        grow_push(&mut self.adjacency, Vec::new(), 1);
        if self.is_directed() {
            grow_push(&mut self.predecessors, Vec::new(), 1);
            grow_push(&mut self.pred_positions, Vec::new(), 1);
        } else {
            grow_push(&mut self.positions, Vec::new(), 1);
        }
        if let Some(w) = &mut self.vertex_weights {
            grow_push(w, DEFAULT_WEIGHT, 1);
        }
        if let Some(l) = &mut self.vertex_labels {
            grow_push(l, None, 1);
        }
        if let Some(ew) = &mut self.edge_weights {
            grow_push(ew, Vec::new(), 1);
        }
        if let Some(el) = &mut self.edge_labels {
            grow_push(el, Vec::new(), 1);
        }
        if let Some(bs) = &mut self.bitsets {
            grow_push(bs, None, 1);
        }
        self.next_id = self.next_id.max(v.saturating_add(1));
        self.mods += 1;
        Ok(v)
    }

    fn materialize_vertex_index(&mut self) {
        let map = self
            .vertices
            .iter()
            .enumerate()
            .map(|(p, &id)| (id, p as u32))
            .collect();
        self.vertex_index = Some(map);
    }

    /// Removes `v` and all incident edges in O(d(v)) mirror removals, then
    /// fills the vertex's column position with the last vertex.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let p = self.require(v)?;
        // tear down incident edges from the back of each list, O(1) a piece
        if self.is_directed() {
            while let Some(&u) = self.adjacency[p].last() {
                let slot = self.adjacency[p].len() - 1;
                self.remove_arc_cells(p, slot, self.expect(u));
            }
            while let Some(&u) = self.predecessors[p].last() {
                let slot = self.predecessors[p].len() - 1;
                let succ_slot = self.pred_positions[p][slot] as usize;
                self.remove_arc_cells(self.expect(u), succ_slot, p);
            }
        } else {
            while let Some(&u) = self.adjacency[p].last() {
                let slot = self.adjacency[p].len() - 1;
                if u == v {
                    let mirror = self.positions[p][slot] as usize;
                    self.remove_loop_cells(p, slot, mirror);
                } else {
                    let j = self.positions[p][slot] as usize;
                    self.remove_undirected_cells(p, slot, self.expect(u), j);
                }
            }
        }
        if let Some(loops) = &mut self.self_loops {
            loops.remove(&v);
        }
        // the vertex column entry itself goes by swap-with-last
        let last = self.vertices.len() - 1;
        if self.vertex_index.is_none() && p != last {
            self.materialize_vertex_index();
        }
        self.vertices.swap_remove(p);
        self.adjacency.swap_remove(p);
        if self.is_directed() {
            self.predecessors.swap_remove(p);
            self.pred_positions.swap_remove(p);
        } else {
            self.positions.swap_remove(p);
        }
        if let Some(w) = &mut self.vertex_weights {
            w.swap_remove(p);
        }
        if let Some(l) = &mut self.vertex_labels {
            let label = l.swap_remove(p);
            if let (Some(label), Some(map)) = (label, &mut self.label_to_vertex) {
                if map.get(&label) == Some(&v) {
                    map.remove(&label);
                    // keep the lowest-position vertex for a duplicated label
                    if let Some(other) = l
                        .iter()
                        .position(|x| x.as_ref() == Some(&label))
                    {
                        map.insert(label, self.vertices[other]);
                    }
                }
            }
        }
        if let Some(ew) = &mut self.edge_weights {
            ew.swap_remove(p);
        }
        if let Some(el) = &mut self.edge_labels {
            el.swap_remove(p);
        }
        if let Some(bs) = &mut self.bitsets {
            bs.swap_remove(p);
        }
        if let Some(map) = &mut self.vertex_index {
            map.remove(&v);
            if p != last {
                map.insert(self.vertices[p], p as u32);
            }
        }
        self.mods += 1;
        Ok(())
    }

    // ------------------------------------------------------------------
    // Edge mutation
    // ------------------------------------------------------------------

    pub fn add_edge(&mut self, v: VertexId, u: VertexId) -> Result<EdgeHandle<E>, GraphError> {
        self.add_edge_full(v, u, None, None)
    }

    pub fn add_weighted_edge(
        &mut self,
        v: VertexId,
        u: VertexId,
        weight: f64,
    ) -> Result<EdgeHandle<E>, GraphError> {
        self.add_edge_full(v, u, Some(weight), None)
    }

    pub fn add_labeled_edge(
        &mut self,
        v: VertexId,
        u: VertexId,
        label: E,
    ) -> Result<EdgeHandle<E>, GraphError> {
        self.add_edge_full(v, u, None, Some(label))
    }

    pub fn add_edge_full(
        &mut self,
        v: VertexId,
        u: VertexId,
        weight: Option<f64>,
        label: Option<E>,
    ) -> Result<EdgeHandle<E>, GraphError> {
        let pv = self.require(v)?;
        let pu = self.require(u)?;
        if v == u && !self.kind.allows_self_loops() {
            return Err(GraphError::SelfLoopNotAllowed(v));
        }
        if !self.kind.allows_multi_edges() && self.contains_edge(v, u) {
            return Err(GraphError::DuplicateEdge(v, u));
        }
        if weight.is_some() {
            self.materialize_edge_weights();
        }
        if label.is_some() {
            self.materialize_edge_labels();
        }
        let w = weight.unwrap_or(DEFAULT_WEIGHT);
        let slot = self.adjacency[pv].len() as Slot;
        let hint = self.adj_capacity_hint;
        if self.is_directed() {
            grow_push(&mut self.adjacency[pv], u, hint);
            grow_push(&mut self.predecessors[pu], v, hint);
            grow_push(&mut self.pred_positions[pu], slot, hint);
            if let Some(ew) = &mut self.edge_weights {
                grow_push(&mut ew[pv], w, hint);
            }
            if let Some(el) = &mut self.edge_labels {
                grow_push(&mut el[pv], label.clone(), hint);
            }
        } else if v == u {
            // a loop takes two mirrored cells in its own list
            grow_push(&mut self.adjacency[pv], v, hint);
            grow_push(&mut self.adjacency[pv], v, hint);
            grow_push(&mut self.positions[pv], slot + 1, hint);
            grow_push(&mut self.positions[pv], slot, hint);
            if let Some(ew) = &mut self.edge_weights {
                grow_push(&mut ew[pv], w, hint);
                grow_push(&mut ew[pv], w, hint);
            }
            if let Some(el) = &mut self.edge_labels {
                grow_push(&mut el[pv], label.clone(), hint);
                grow_push(&mut el[pv], label.clone(), hint);
            }
        } else {
            let slot_u = self.adjacency[pu].len() as Slot;
            grow_push(&mut self.adjacency[pv], u, hint);
            grow_push(&mut self.positions[pv], slot_u, hint);
            grow_push(&mut self.adjacency[pu], v, hint);
            grow_push(&mut self.positions[pu], slot, hint);
            if let Some(ew) = &mut self.edge_weights {
                grow_push(&mut ew[pv], w, hint);
                grow_push(&mut ew[pu], w, hint);
            }
            if let Some(el) = &mut self.edge_labels {
                grow_push(&mut el[pv], label.clone(), hint);
                grow_push(&mut el[pu], label.clone(), hint);
            }
        }
        if v == u {
            *self
                .self_loops
                .get_or_insert_with(HashMap::new)
                .entry(v)
                .or_insert(0) += 1;
        }
        self.num_edges += 1;
        self.bitset_note_insert(pv, u);
        if !self.is_directed() && v != u {
            self.bitset_note_insert(pu, v);
        }
        if let (Some(l), Some(map)) = (&label, &mut self.label_to_edge) {
            map.entry(l.clone()).or_insert((v, slot));
        }
        self.mods += 1;
        let mut handle = EdgeHandle::new(self.is_directed(), v, u);
        handle.weight = weight;
        handle.label = label;
        handle.slot = Some((v, slot));
        Ok(handle)
    }

    /// Removes one edge `vu` — the copy at the lowest slot of `v`'s list when
    /// the kind allows parallels. Locating the edge scans `v`'s list; the
    /// cell removals themselves are O(1) swap-removals with mirror repair.
    pub fn remove_edge(&mut self, v: VertexId, u: VertexId) -> Result<(), GraphError> {
        let pv = self.require(v)?;
        let pu = self.require(u)?;
        let slot = self.adjacency[pv]
            .iter()
            .position(|&x| x == u)
            .ok_or(GraphError::UnknownEdge(v, u))?;
        if self.is_directed() {
            self.remove_arc_cells(pv, slot, pu);
        } else if v == u {
            let mirror = self.positions[pv][slot] as usize;
            self.remove_loop_cells(pv, slot, mirror);
        } else {
            let j = self.positions[pv][slot] as usize;
            self.remove_undirected_cells(pv, slot, pu, j);
        }
        self.mods += 1;
        Ok(())
    }

    /// True when the edge `vu` (the arc `v -> u` if directed) is present.
    /// Uses `v`'s adjacency bitset when active, otherwise scans `v`'s list.
    /// Panics on unknown endpoints.
    pub fn contains_edge(&self, v: VertexId, u: VertexId) -> bool {
        self.contains_edge_probed(v, u).0
    }

    /// `contains_edge` plus the number of primitive reads it took: one per
    /// bitset word probed or one per adjacency cell scanned. Evidence for the
    /// O(1)-once-active contract.
    pub fn contains_edge_probed(&self, v: VertexId, u: VertexId) -> (bool, u32) {
        let pv = self.expect(v);
        self.expect(u);
        if let Some(bs) = self.bitset_of(pv) {
            return (bs.get(u), 1);
        }
        let mut reads = 0;
        for &x in &self.adjacency[pv] {
            reads += 1;
            if x == u {
                return (true, reads);
            }
        }
        (false, reads.max(1))
    }

    /// Number of parallel `vu` edges (0 or 1 in simple kinds). A self-loop
    /// counts once. Scans `v`'s list.
    pub fn multiplicity(&self, v: VertexId, u: VertexId) -> u32 {
        let pv = self.expect(v);
        self.expect(u);
        let cells = self.adjacency[pv].iter().filter(|&&x| x == u).count() as u32;
        if v == u && !self.is_directed() {
            cells / 2
        } else {
            cells
        }
    }

    /// Handles for every parallel `vu` edge.
    pub fn edges_between(&self, v: VertexId, u: VertexId) -> Vec<EdgeHandle<E>> {
        let pv = self.expect(v);
        self.expect(u);
        let mut out = Vec::new();
        for (slot, &x) in self.adjacency[pv].iter().enumerate() {
            if x == u {
                if v == u && !self.is_directed() && self.positions[pv][slot] < slot as Slot {
                    continue; // second cell of a loop pair
                }
                out.push(self.handle_at(pv, slot));
            }
        }
        out
    }

    /// Self-loop count of `v`, O(1) via the loop map. Panics unless the kind
    /// allows self-loops.
    pub fn self_loop_count(&self, v: VertexId) -> u32 {
        assert!(
            self.kind.allows_self_loops(),
            "self_loop_count requires a pseudograph kind"
        );
        self.expect(v);
        self.self_loops
            .as_ref()
            .and_then(|m| m.get(&v).copied())
            .unwrap_or(0)
    }

    // ------------------------------------------------------------------
    // Adjacency access
    // ------------------------------------------------------------------

    /// Neighbor list of `v` (successor list when directed), in slot order.
    #[inline]
    pub fn neighbors_of(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[self.expect(v)]
    }

    /// Successor list of a directed graph's vertex.
    #[inline]
    pub fn successors_of(&self, v: VertexId) -> &[VertexId] {
        assert!(self.is_directed(), "successors_of requires a directed kind");
        &self.adjacency[self.expect(v)]
    }

    /// Predecessor list of a directed graph's vertex.
    #[inline]
    pub fn predecessors_of(&self, v: VertexId) -> &[VertexId] {
        assert!(
            self.is_directed(),
            "predecessors_of requires a directed kind"
        );
        &self.predecessors[self.expect(v)]
    }

    /// Degree of `v`: the live length of its adjacency list. A self-loop
    /// contributes 2 in undirected kinds. For directed kinds this equals the
    /// outdegree.
    #[inline]
    pub fn degree(&self, v: VertexId) -> u32 {
        self.adjacency[self.expect(v)].len() as u32
    }

    #[inline]
    pub fn outdegree(&self, v: VertexId) -> u32 {
        assert!(self.is_directed(), "outdegree requires a directed kind");
        self.adjacency[self.expect(v)].len() as u32
    }

    #[inline]
    pub fn indegree(&self, v: VertexId) -> u32 {
        assert!(self.is_directed(), "indegree requires a directed kind");
        self.predecessors[self.expect(v)].len() as u32
    }

    /// Position-indexed adjacency access for algorithm hot loops.
    #[inline]
    pub fn neighbors_at(&self, p: u32) -> &[VertexId] {
        &self.adjacency[p as usize]
    }

    #[inline]
    pub fn predecessors_at(&self, p: u32) -> &[VertexId] {
        &self.predecessors[p as usize]
    }

    /// Slot in the successor list of `predecessors_at(p)[s]` holding this arc.
    #[inline]
    pub fn pred_position_at(&self, p: u32, s: Slot) -> Slot {
        self.pred_positions[p as usize][s as usize]
    }

    /// Undirected only: the slot of the mirrored cell of `(p, s)` inside the
    /// neighbor's adjacency list.
    #[inline]
    pub fn mirror_slot(&self, p: u32, s: Slot) -> Slot {
        self.positions[p as usize][s as usize]
    }

    /// Edge weight cells of `v`'s list, or `None` while the weight column was
    /// never created (every edge then weighs [`DEFAULT_WEIGHT`]).
    #[inline]
    pub fn edge_weights_of(&self, v: VertexId) -> Option<&[f64]> {
        let p = self.expect(v);
        self.edge_weights.as_ref().map(|ew| ew[p].as_slice())
    }

    #[inline]
    pub fn edge_weights_at(&self, p: u32) -> Option<&[f64]> {
        self.edge_weights.as_ref().map(|ew| ew[p as usize].as_slice())
    }

    /// Read-only iteration over `(neighbor, slot)` cells of `v`'s list.
    pub fn neighbor_iter(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Slot)> + '_ {
        let p = self.expect(v);
        let mods = self.mods;
        self.adjacency[p].iter().enumerate().map(move |(s, &u)| {
            debug_assert_eq!(mods, self.mods, "graph mutated during iteration");
            (u, s as Slot)
        })
    }

    pub fn successor_iter(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Slot)> + '_ {
        assert!(self.is_directed(), "successor_iter requires a directed kind");
        self.neighbor_iter(v)
    }

    pub fn predecessor_iter(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Slot)> + '_ {
        assert!(
            self.is_directed(),
            "predecessor_iter requires a directed kind"
        );
        let p = self.expect(v);
        let mods = self.mods;
        self.predecessors[p].iter().enumerate().map(move |(s, &u)| {
            debug_assert_eq!(mods, self.mods, "graph mutated during iteration");
            (u, s as Slot)
        })
    }

    /// A mutable cursor over `v`'s neighbor cells supporting O(1)
    /// remove/reweight/relabel of the current edge.
    pub fn neighbor_cursor(&mut self, v: VertexId) -> NeighborCursor<'_, V, E> {
        let p = self.expect(v) as u32;
        NeighborCursor::new(self, p, CursorMode::Adjacency)
    }

    pub fn successor_cursor(&mut self, v: VertexId) -> NeighborCursor<'_, V, E> {
        assert!(
            self.is_directed(),
            "successor_cursor requires a directed kind"
        );
        self.neighbor_cursor(v)
    }

    pub fn predecessor_cursor(&mut self, v: VertexId) -> NeighborCursor<'_, V, E> {
        assert!(
            self.is_directed(),
            "predecessor_cursor requires a directed kind"
        );
        let p = self.expect(v) as u32;
        NeighborCursor::new(self, p, CursorMode::Predecessors)
    }

    // ------------------------------------------------------------------
    // Weights
    // ------------------------------------------------------------------

    fn materialize_vertex_weights(&mut self) {
        if self.vertex_weights.is_none() {
            self.vertex_weights = Some(alloc::vec![DEFAULT_WEIGHT; self.vertices.len()]);
        }
    }

    fn materialize_edge_weights(&mut self) {
        if self.edge_weights.is_none() {
            self.edge_weights = Some(
                self.adjacency
                    .iter()
                    .map(|l| alloc::vec![DEFAULT_WEIGHT; l.len()])
                    .collect(),
            );
        }
    }

    fn materialize_vertex_labels(&mut self) {
        if self.vertex_labels.is_none() {
            self.vertex_labels = Some(alloc::vec![None; self.vertices.len()]);
        }
    }

    fn materialize_edge_labels(&mut self) {
        if self.edge_labels.is_none() {
            self.edge_labels = Some(
                self.adjacency
                    .iter()
                    .map(|l| alloc::vec![None; l.len()])
                    .collect(),
            );
        }
    }

    pub fn vertex_weight(&self, v: VertexId) -> f64 {
        let p = self.expect(v);
        self.vertex_weights
            .as_ref()
            .map_or(DEFAULT_WEIGHT, |w| w[p])
    }

    pub fn set_vertex_weight(&mut self, v: VertexId, w: f64) -> Result<(), GraphError> {
        let p = self.require(v)?;
        self.materialize_vertex_weights();
        self.vertex_weights.as_mut().unwrap()[p] = w;
        Ok(())
    }

    /// Weight of the first `vu` cell in `v`'s list; `DEFAULT_WEIGHT` while the
    /// column was never created. O(d(v)) scan — cursors read it in O(1).
    /// Panics if the edge is absent.
    pub fn edge_weight(&self, v: VertexId, u: VertexId) -> f64 {
        let (p, slot) = self.expect_edge_slot(v, u);
        self.edge_weights
            .as_ref()
            .map_or(DEFAULT_WEIGHT, |ew| ew[p][slot])
    }

    /// Sets the weight of edge `vu`, writing both mirror cells when
    /// undirected. For parallels, the copy at the lowest slot is set.
    pub fn set_edge_weight(&mut self, v: VertexId, u: VertexId, w: f64) -> Result<(), GraphError> {
        let pv = self.require(v)?;
        self.require(u)?;
        let slot = self.adjacency[pv]
            .iter()
            .position(|&x| x == u)
            .ok_or(GraphError::UnknownEdge(v, u))?;
        self.materialize_edge_weights();
        self.write_weight_cells(pv, slot, w);
        Ok(())
    }

    /// Writes the weight at cell (p, slot) and its mirror.
    fn write_weight_cells(&mut self, p: usize, slot: usize, w: f64) {
        let ew = self.edge_weights.as_mut().unwrap();
        ew[p][slot] = w;
        if !self.is_directed() {
            let u = self.adjacency[p][slot];
            let mirror = self.positions[p][slot] as usize;
            let pu = self.expect(u);
            self.edge_weights.as_mut().unwrap()[pu][mirror] = w;
        }
    }

    // ------------------------------------------------------------------
    // Labels
    // ------------------------------------------------------------------

    pub fn vertex_label(&self, v: VertexId) -> Option<&V> {
        let p = self.expect(v);
        self.vertex_labels.as_ref().and_then(|l| l[p].as_ref())
    }

    pub fn set_vertex_label(&mut self, v: VertexId, label: V) -> Result<(), GraphError> {
        let p = self.require(v)?;
        self.materialize_vertex_labels();
        self.vertex_labels.as_mut().unwrap()[p] = Some(label.clone());
        if self.label_to_vertex.is_some() {
            // keep the entry pointing at the lowest internal position
            let existing = self
                .label_to_vertex
                .as_ref()
                .and_then(|m| m.get(&label))
                .copied();
            let takeover = match existing {
                None => true,
                Some(cur) => self.index_of(cur).is_none_or(|cp| (p as u32) < cp),
            };
            if takeover {
                self.label_to_vertex.as_mut().unwrap().insert(label, v);
            }
        }
        Ok(())
    }

    pub fn edge_label(&self, v: VertexId, u: VertexId) -> Option<&E> {
        let (p, slot) = self.expect_edge_slot(v, u);
        self.edge_labels.as_ref().and_then(|el| el[p][slot].as_ref())
    }

    pub fn set_edge_label(&mut self, v: VertexId, u: VertexId, label: E) -> Result<(), GraphError> {
        let pv = self.require(v)?;
        self.require(u)?;
        let slot = self.adjacency[pv]
            .iter()
            .position(|&x| x == u)
            .ok_or(GraphError::UnknownEdge(v, u))?;
        self.materialize_edge_labels();
        let el = self.edge_labels.as_mut().unwrap();
        el[pv][slot] = Some(label.clone());
        if !self.is_directed() {
            let mirror = self.positions[pv][slot] as usize;
            let pu = self.expect(u);
            self.edge_labels.as_mut().unwrap()[pu][mirror] = Some(label.clone());
        }
        if let Some(map) = &mut self.label_to_edge {
            map.entry(label).or_insert((v, slot as Slot));
        }
        Ok(())
    }

    /// Finds a vertex by label in O(1), materializing the lookup map on first
    /// call. With duplicated labels the lowest internal position wins.
    pub fn find_vertex(&mut self, label: &V) -> Option<VertexId> {
        if self.label_to_vertex.is_none() {
            let mut map = HashMap::new();
            if let Some(labels) = &self.vertex_labels {
                for (p, l) in labels.iter().enumerate() {
                    if let Some(l) = l {
                        map.entry(l.clone()).or_insert(self.vertices[p]);
                    }
                }
            }
            self.label_to_vertex = Some(map);
        }
        self.label_to_vertex.as_ref().unwrap().get(label).copied()
    }

    /// All vertices carrying `label`, by O(n) scan, in position order.
    pub fn find_all_vertices(&self, label: &V) -> Vec<VertexId> {
        match &self.vertex_labels {
            Some(labels) => labels
                .iter()
                .enumerate()
                .filter(|(_, l)| l.as_ref() == Some(label))
                .map(|(p, _)| self.vertices[p])
                .collect(),
            None => Vec::new(),
        }
    }

    /// Finds an edge by label in O(1), materializing the lookup map on first
    /// call. The stored cell coordinates are validated before use; a stale
    /// entry is dropped and reported as not-found.
    pub fn find_edge(&mut self, label: &E) -> Option<EdgeHandle<E>> {
        if self.label_to_edge.is_none() {
            let mut map: HashMap<E, (VertexId, Slot)> = HashMap::new();
            if let Some(el) = &self.edge_labels {
                for p in 0..self.adjacency.len() {
                    for (slot, l) in el[p].iter().enumerate() {
                        let Some(l) = l else { continue };
                        if self.is_canonical_cell(p, slot) {
                            map.entry(l.clone()).or_insert((self.vertices[p], slot as Slot));
                        }
                    }
                }
            }
            self.label_to_edge = Some(map);
        }
        let (v, slot) = *self.label_to_edge.as_ref().unwrap().get(label)?;
        // validate the coordinates still carry this label
        let valid = self.index_of(v).is_some_and(|p| {
            self.edge_labels.as_ref().is_some_and(|el| {
                el[p as usize]
                    .get(slot as usize)
                    .is_some_and(|l| l.as_ref() == Some(label))
            })
        });
        if !valid {
            self.label_to_edge.as_mut().unwrap().remove(label);
            return None;
        }
        let p = self.expect(v);
        Some(self.handle_at(p, slot as usize))
    }

    /// All edges carrying `label`, by O(m) scan, each undirected edge once.
    pub fn find_all_edges(&self, label: &E) -> Vec<EdgeHandle<E>> {
        let Some(el) = &self.edge_labels else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for p in 0..self.adjacency.len() {
            for (slot, l) in el[p].iter().enumerate() {
                if l.as_ref() == Some(label) && self.is_canonical_cell(p, slot) {
                    out.push(self.handle_at(p, slot));
                }
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // Whole-edge iteration
    // ------------------------------------------------------------------

    /// True for the cell that canonically represents its edge: every cell of
    /// a directed graph, and the lower (position, slot) cell of an undirected
    /// edge's mirrored pair.
    fn is_canonical_cell(&self, p: usize, slot: usize) -> bool {
        if self.is_directed() {
            return true;
        }
        let u = self.adjacency[p][slot];
        let pu = self.expect(u);
        let mirror = self.positions[p][slot] as usize;
        (p, slot) <= (pu, mirror)
    }

    fn handle_at(&self, p: usize, slot: usize) -> EdgeHandle<E> {
        let v = self.vertices[p];
        let u = self.adjacency[p][slot];
        let mut h = EdgeHandle::new(self.is_directed(), v, u);
        h.weight = self.edge_weights.as_ref().map(|ew| ew[p][slot]);
        h.label = self
            .edge_labels
            .as_ref()
            .and_then(|el| el[p][slot].clone());
        h.slot = Some((v, slot as Slot));
        h
    }

    /// All edges as transient handles, in canonical `(position, slot)` order,
    /// each undirected edge exactly once from its lower-position endpoint.
    pub fn edges(&self) -> impl Iterator<Item = EdgeHandle<E>> + '_ {
        (0..self.adjacency.len()).flat_map(move |p| {
            (0..self.adjacency[p].len()).filter_map(move |slot| {
                self.is_canonical_cell(p, slot)
                    .then(|| self.handle_at(p, slot))
            })
        })
    }

    fn expect_edge_slot(&self, v: VertexId, u: VertexId) -> (usize, usize) {
        let p = self.expect(v);
        self.expect(u);
        let slot = self.adjacency[p]
            .iter()
            .position(|&x| x == u)
            .unwrap_or_else(|| panic!("no edge {v}-{u}"));
        (p, slot)
    }

    // ------------------------------------------------------------------
    // Adjacency bitsets
    // ------------------------------------------------------------------

    /// Overrides the bitset activation threshold. `None` restores the default
    /// of ceil(sqrt n). Vertices already activated stay active.
    pub fn set_bitset_threshold(&mut self, threshold: Option<u32>) {
        self.bitset_threshold = threshold;
    }

    pub fn bitset_threshold(&self) -> Option<u32> {
        self.bitset_threshold
    }

    /// Whether `v`'s adjacency bitset is currently active.
    pub fn bitset_active(&self, v: VertexId) -> bool {
        let p = self.expect(v);
        self.bitset_of(p).is_some()
    }

    #[inline]
    fn bitset_of(&self, p: usize) -> Option<&Bitset> {
        self.bitsets.as_ref().and_then(|bs| bs[p].as_ref())
    }

    #[inline]
    fn degree_reaches_threshold(&self, degree: usize) -> bool {
        match self.bitset_threshold {
            Some(t) => degree as u64 >= t as u64,
            // degree >= ceil(sqrt n), i.e. degree^2 >= n
            None => {
                let d = degree as u64;
                d > 0 && d * d >= self.vertices.len() as u64
            }
        }
    }

    /// After inserting neighbor `u` into the list at `p`: update an active
    /// bitset, or bulk-build one when the degree first reaches the threshold.
    fn bitset_note_insert(&mut self, p: usize, u: VertexId) {
        if let Some(Some(bs)) = self.bitsets.as_mut().map(|b| &mut b[p]) {
            bs.set(u);
            return;
        }
        if self.degree_reaches_threshold(self.adjacency[p].len()) {
            let mut bs = Bitset::with_bits(self.vertices.len());
            for &x in &self.adjacency[p] {
                bs.set(x);
            }
            let n = self.vertices.len();
            self.bitsets.get_or_insert_with(|| alloc::vec![None; n])[p] = Some(bs);
        }
    }

    /// After removing neighbor `u` from the list at `p`, clear its bit unless
    /// a parallel copy remains.
    fn bitset_note_remove(&mut self, p: usize, u: VertexId) {
        let survives =
            self.kind.allows_multi_edges() && self.adjacency[p].iter().any(|&x| x == u);
        if let Some(Some(bs)) = self.bitsets.as_mut().map(|b| &mut b[p]) {
            if !survives {
                bs.clear(u);
            }
        }
    }

    // ------------------------------------------------------------------
    // Instrumentation
    // ------------------------------------------------------------------

    pub(crate) fn set_adj_capacity_hint(&mut self, hint: usize) {
        self.adj_capacity_hint = hint;
    }

    /// Which lazy members currently exist, plus the live per-vertex bitset
    /// sizes, for the memory model.
    pub(crate) fn active_members(&self) -> crate::memory::ActiveMembers {
        let bitset_bytes = self
            .bitsets
            .as_ref()
            .map(|bs| {
                bs.iter()
                    .flatten()
                    .map(|b| b.word_count() as u64 * 8)
                    .sum()
            })
            .unwrap_or(0);
        let bitset_vertices = self
            .bitsets
            .as_ref()
            .map(|bs| bs.iter().flatten().count() as u64)
            .unwrap_or(0);
        crate::memory::ActiveMembers {
            vertex_weights: self.vertex_weights.is_some(),
            vertex_labels: self.vertex_labels.is_some(),
            edge_weights: self.edge_weights.is_some(),
            edge_labels: self.edge_labels.is_some(),
            bitset_vertices,
            bitset_bytes,
            vertex_index: self.vertex_index.is_some(),
            label_to_vertex: self.label_to_vertex.is_some(),
            label_to_edge: self.label_to_edge.is_some(),
        }
    }

    /// The modeled memory footprint of this graph's columns.
    pub fn estimate_memory(&self) -> crate::memory::MemoryModel {
        crate::memory::MemoryModel::of(self)
    }

    /// Cumulative number of adjacency cells relocated by swap-removals.
    /// Each edge removal relocates at most two cells.
    pub fn cells_moved(&self) -> u64 {
        self.cells_moved
    }

    pub fn reset_cells_moved(&mut self) {
        self.cells_moved = 0;
    }

    pub(crate) fn mod_count(&self) -> u64 {
        self.mods
    }

    // ------------------------------------------------------------------
    // Cell removal internals
    // ------------------------------------------------------------------

    /// Swap-removes one adjacency cell and repairs the relocated cell's
    /// mirror `positions` entry. The removed cell's own mirror is NOT
    /// touched; callers remove it separately.
    fn remove_adj_cell(&mut self, p: usize, slot: usize) {
        let last = self.adjacency[p].len() - 1;
        let owner = self.vertices[p];
        let removed_label = self.take_cell(p, slot);
        if slot != last {
            // repair: the moved cell's mirror must point at its new slot
            let w = self.adjacency[p][slot];
            let t = self.positions[p][slot] as usize;
            let pw = self.expect(w);
            self.positions[pw][t] = slot as Slot;
            self.cells_moved += 1;
            self.refresh_moved_label(p, slot, owner, last);
        }
        self.drop_label_entry(removed_label, owner, slot, p);
    }

    /// Swap-removes cell `slot` of the list at `p` across all parallel
    /// columns (adjacency, positions/pred_positions, weights, labels) and
    /// returns the removed cell's label.
    fn take_cell(&mut self, p: usize, slot: usize) -> Option<E> {
        self.adjacency[p].swap_remove(slot);
        if !self.is_directed() {
            self.positions[p].swap_remove(slot);
        }
        if let Some(ew) = &mut self.edge_weights {
            ew[p].swap_remove(slot);
        }
        match &mut self.edge_labels {
            Some(el) => el[p].swap_remove(slot),
            None => None,
        }
    }

    /// After the cell previously at `old_slot` moved to `slot`, refresh a
    /// label-map entry that pointed at it.
    fn refresh_moved_label(&mut self, p: usize, slot: usize, owner: VertexId, old_slot: usize) {
        let Some(el) = &self.edge_labels else { return };
        let Some(label) = el[p][slot].clone() else {
            return;
        };
        if let Some(map) = &mut self.label_to_edge {
            if let Some(coords) = map.get_mut(&label) {
                if *coords == (owner, old_slot as Slot) {
                    *coords = (owner, slot as Slot);
                }
            }
        }
    }

    /// Drops the label-map entry of a removed cell, unless the swap left an
    /// equal label sitting at the same coordinates.
    fn drop_label_entry(&mut self, removed: Option<E>, owner: VertexId, slot: usize, p: usize) {
        let Some(label) = removed else { return };
        let Some(map) = &mut self.label_to_edge else {
            return;
        };
        if map.get(&label) == Some(&(owner, slot as Slot)) {
            let still_there = self
                .edge_labels
                .as_ref()
                .is_some_and(|el| el[p].get(slot).is_some_and(|l| l.as_ref() == Some(&label)));
            if !still_there {
                map.remove(&label);
            }
        }
    }

    /// Removes the two mirrored cells of an undirected non-loop edge.
    fn remove_undirected_cells(&mut self, pv: usize, i: usize, pu: usize, j: usize) {
        debug_assert_ne!(pv, pu);
        let v = self.vertices[pv];
        let u = self.vertices[pu];
        // mirror side first: its indices are unaffected by pv's swap
        self.remove_adj_cell(pu, j);
        self.remove_adj_cell(pv, i);
        self.num_edges -= 1;
        self.bitset_note_remove(pv, u);
        self.bitset_note_remove(pu, v);
    }

    /// Removes the two same-list cells of an undirected self-loop.
    fn remove_loop_cells(&mut self, p: usize, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        let v = self.vertices[p];
        let (hi, lo) = if a > b { (a, b) } else { (b, a) };
        self.remove_adj_cell(p, hi);
        self.remove_adj_cell(p, lo);
        self.num_edges -= 1;
        if let Some(loops) = &mut self.self_loops {
            if let Some(c) = loops.get_mut(&v) {
                *c -= 1;
                if *c == 0 {
                    loops.remove(&v);
                }
            }
        }
        self.bitset_note_remove(p, v);
    }

    /// Removes a directed arc given its successor cell (pv, slot) and the
    /// predecessor-side owner position pu.
    fn remove_arc_cells(&mut self, pv: usize, slot: usize, pu: usize) {
        let v = self.vertices[pv];
        let u = self.adjacency[pv][slot];
        // locate and drop the predecessor cell (value v, pointing at slot)
        let j = self.predecessors[pu]
            .iter()
            .zip(self.pred_positions[pu].iter())
            .position(|(&x, &s)| x == v && s as usize == slot)
            .expect("mirror predecessor cell must exist");
        self.predecessors[pu].swap_remove(j);
        self.pred_positions[pu].swap_remove(j);
        if j != self.predecessors[pu].len() {
            self.cells_moved += 1;
        }
        // drop the successor cell and repair the relocated arc's pred_position
        let last = self.adjacency[pv].len() - 1;
        let removed_label = self.take_cell(pv, slot);
        if slot != last {
            let w = self.adjacency[pv][slot];
            let pw = self.expect(w);
            let k = self.predecessors[pw]
                .iter()
                .zip(self.pred_positions[pw].iter())
                .position(|(&x, &s)| x == v && s as usize == last)
                .expect("mirror predecessor cell must exist");
            self.pred_positions[pw][k] = slot as Slot;
            self.cells_moved += 1;
            self.refresh_moved_label(pv, slot, v, last);
        }
        self.drop_label_entry(removed_label, v, slot, pv);
        if v == u {
            if let Some(loops) = &mut self.self_loops {
                if let Some(c) = loops.get_mut(&v) {
                    *c -= 1;
                    if *c == 0 {
                        loops.remove(&v);
                    }
                }
            }
        }
        self.num_edges -= 1;
        self.bitset_note_remove(pv, u);
    }

    // ------------------------------------------------------------------
    // Consistency checking
    // ------------------------------------------------------------------

    /// Verifies every structural invariant: mirror round-trips, degree/count
    /// conservation, kind constraints, bitset coherence and index-map
    /// correctness. Returns a description of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        use alloc::format;
        let n = self.vertices.len();
        if self.adjacency.len() != n {
            return Err(format!("adjacency column has {} rows, n={n}", self.adjacency.len()));
        }
        // id/index agreement
        for (p, &v) in self.vertices.iter().enumerate() {
            if self.index_of(v) != Some(p as u32) {
                return Err(format!("index_of({v}) != {p}"));
            }
        }
        if self.vertex_index.is_none() {
            for (p, &v) in self.vertices.iter().enumerate() {
                if v as usize != p {
                    return Err(format!("dense id invariant broken at position {p}: id {v}"));
                }
            }
        }
        let mut cell_total: u64 = 0;
        for p in 0..n {
            let v = self.vertices[p];
            cell_total += self.adjacency[p].len() as u64;
            if !self.is_directed() && self.positions[p].len() != self.adjacency[p].len() {
                return Err(format!("positions length mismatch at {v}"));
            }
            if let Some(ew) = &self.edge_weights {
                if ew[p].len() != self.adjacency[p].len() {
                    return Err(format!("edge weight column length mismatch at {v}"));
                }
            }
            if let Some(el) = &self.edge_labels {
                if el[p].len() != self.adjacency[p].len() {
                    return Err(format!("edge label column length mismatch at {v}"));
                }
            }
            for (s, &u) in self.adjacency[p].iter().enumerate() {
                let Some(pu) = self.index_of(u) else {
                    return Err(format!("adjacency cell ({v},{s}) names unknown vertex {u}"));
                };
                let pu = pu as usize;
                if u == v && !self.kind.allows_self_loops() {
                    return Err(format!("self-loop cell at {v} in a no-loop kind"));
                }
                if !self.is_directed() {
                    let t = self.positions[p][s] as usize;
                    if t >= self.adjacency[pu].len()
                        || self.adjacency[pu][t] != v
                        || self.positions[pu][t] as usize != s
                    {
                        return Err(format!("mirror invariant broken at ({v},{s})"));
                    }
                    if let Some(ew) = &self.edge_weights {
                        if ew[p][s].to_bits() != ew[pu][t].to_bits() {
                            return Err(format!("mirrored weights disagree at ({v},{s})"));
                        }
                    }
                } else {
                    let t = self.predecessors[pu]
                        .iter()
                        .zip(self.pred_positions[pu].iter())
                        .position(|(&x, &ps)| x == v && ps as usize == s);
                    if t.is_none() {
                        return Err(format!("arc ({v},{u}) slot {s} has no predecessor cell"));
                    }
                }
                if !self.kind.allows_multi_edges() {
                    if self.adjacency[p][..s].contains(&u) {
                        return Err(format!("duplicate adjacency cell {u} at simple vertex {v}"));
                    }
                }
            }
            if let Some(bs) = self.bitset_of(p) {
                for &u in &self.adjacency[p] {
                    if !bs.get(u) {
                        return Err(format!("bitset missing neighbor {u} of {v}"));
                    }
                }
                let support: hashbrown::HashSet<u32> =
                    self.adjacency[p].iter().copied().collect();
                if bs.count_ones() != support.len() {
                    return Err(format!("bitset of {v} has stray bits"));
                }
            }
        }
        if self.is_directed() {
            let pred_total: u64 = self.predecessors.iter().map(|l| l.len() as u64).sum();
            if cell_total != self.num_edges || pred_total != self.num_edges {
                return Err(format!(
                    "arc counts disagree: succ {cell_total}, pred {pred_total}, m {}",
                    self.num_edges
                ));
            }
            for p in 0..n {
                if self.pred_positions[p].len() != self.predecessors[p].len() {
                    return Err(format!("pred_positions length mismatch at position {p}"));
                }
                for (s, (&x, &t)) in self.predecessors[p]
                    .iter()
                    .zip(self.pred_positions[p].iter())
                    .enumerate()
                {
                    let Some(px) = self.index_of(x) else {
                        return Err(format!("predecessor cell at position {p} names unknown {x}"));
                    };
                    let list = &self.adjacency[px as usize];
                    if t as usize >= list.len() || list[t as usize] != self.vertices[p] {
                        return Err(format!("pred mirror broken at position {p} slot {s}"));
                    }
                }
            }
        } else if cell_total != 2 * self.num_edges {
            return Err(format!(
                "handshake broken: {} cells vs m={}",
                cell_total, self.num_edges
            ));
        }
        // self-loop accounting
        let mut loops: HashMap<VertexId, u32> = HashMap::new();
        for p in 0..n {
            let v = self.vertices[p];
            let cells = self.adjacency[p].iter().filter(|&&x| x == v).count() as u32;
            let c = if self.is_directed() { cells } else { cells / 2 };
            if !self.is_directed() && cells % 2 != 0 {
                return Err(format!("odd loop cell count at {v}"));
            }
            if c > 0 {
                loops.insert(v, c);
            }
        }
        let recorded = self.self_loops.clone().unwrap_or_default();
        if recorded != loops {
            return Err(String::from("self-loop map out of sync"));
        }
        Ok(())
    }
}

// ------------------------------------------------------------------
// Mutable cursor
// ------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum CursorMode {
    /// Neighbor cells (successor cells when directed).
    Adjacency,
    /// Predecessor cells of a directed graph.
    Predecessors,
}

/// A cursor over one vertex's adjacency cells with O(1) operations on the
/// current edge: read/set weight or label, and remove. After a removal the
/// cursor revisits the cell that swap-filled the hole, so no live cell is
/// skipped or repeated.
pub struct NeighborCursor<'g, V: Label, E: Label> {
    g: &'g mut Graph<V, E>,
    p: u32,
    mode: CursorMode,
    /// Next slot to yield.
    next: u32,
    /// Slot of the cell most recently yielded.
    current: Option<u32>,
    mods: u64,
}

impl<'g, V: Label, E: Label> NeighborCursor<'g, V, E> {
    fn new(g: &'g mut Graph<V, E>, p: u32, mode: CursorMode) -> Self {
        let mods = g.mods;
        Self {
            g,
            p,
            mode,
            next: 0,
            current: None,
            mods,
        }
    }

    fn list(&self) -> &[VertexId] {
        match self.mode {
            CursorMode::Adjacency => &self.g.adjacency[self.p as usize],
            CursorMode::Predecessors => &self.g.predecessors[self.p as usize],
        }
    }

    /// Advances to the next live cell, returning `(vertex, slot)`.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<(VertexId, Slot)> {
        debug_assert_eq!(self.mods, self.g.mods, "graph mutated behind the cursor");
        if (self.next as usize) < self.list().len() {
            let slot = self.next;
            self.next += 1;
            self.current = Some(slot);
            Some((self.list()[slot as usize], slot))
        } else {
            self.current = None;
            None
        }
    }

    fn current_slot(&self) -> usize {
        self.current.expect("cursor not positioned on a cell") as usize
    }

    /// Owner-side cell (position, slot) carrying the current edge's data:
    /// the cell itself for adjacency cursors, the mirrored successor cell
    /// for predecessor cursors.
    fn data_cell(&self) -> (usize, usize) {
        let s = self.current_slot();
        match self.mode {
            CursorMode::Adjacency => (self.p as usize, s),
            CursorMode::Predecessors => {
                let u = self.g.predecessors[self.p as usize][s];
                let pu = self.g.expect(u);
                (pu, self.g.pred_positions[self.p as usize][s] as usize)
            }
        }
    }

    /// Weight of the current edge, in O(1).
    pub fn weight(&self) -> f64 {
        let (p, s) = self.data_cell();
        self.g.edge_weights.as_ref().map_or(DEFAULT_WEIGHT, |ew| ew[p][s])
    }

    /// Sets the weight of the current edge in O(1), mirroring when undirected.
    pub fn set_weight(&mut self, w: f64) {
        let (p, s) = self.data_cell();
        self.g.materialize_edge_weights();
        self.g.write_weight_cells(p, s, w);
    }

    pub fn label(&self) -> Option<&E> {
        let (p, s) = self.data_cell();
        self.g.edge_labels.as_ref().and_then(|el| el[p][s].as_ref())
    }

    pub fn set_label(&mut self, label: E) {
        let (p, s) = self.data_cell();
        self.g.materialize_edge_labels();
        let el = self.g.edge_labels.as_mut().unwrap();
        el[p][s] = Some(label.clone());
        if self.mode == CursorMode::Adjacency && !self.g.is_directed() {
            let u = self.g.adjacency[p][s];
            let t = self.g.positions[p][s] as usize;
            let pu = self.g.expect(u);
            self.g.edge_labels.as_mut().unwrap()[pu][t] = Some(label.clone());
        }
        if let Some(map) = &mut self.g.label_to_edge {
            map.entry(label).or_insert((self.g.vertices[p], s as Slot));
        }
    }

    /// Removes the edge under the cursor in O(1) cell moves. The cursor then
    /// continues with the cell that replaced it.
    pub fn remove(&mut self) {
        let cur = self.current_slot();
        let p = self.p as usize;
        match self.mode {
            CursorMode::Adjacency => {
                let u = self.g.adjacency[p][cur];
                let v = self.g.vertices[p];
                if self.g.is_directed() {
                    let pu = self.g.expect(u);
                    self.g.remove_arc_cells(p, cur, pu);
                    self.back_up();
                } else if u == v {
                    self.remove_loop_under_cursor(cur);
                } else {
                    let pu = self.g.expect(u);
                    let j = self.g.positions[p][cur] as usize;
                    self.g.remove_undirected_cells(p, cur, pu, j);
                    self.back_up();
                }
            }
            CursorMode::Predecessors => {
                let u = self.g.predecessors[p][cur];
                let pu = self.g.expect(u);
                let succ_slot = self.g.pred_positions[p][cur] as usize;
                // the arc's pred cell may move during removal; it is `cur`'s
                // list being edited, so simply continue from `cur`
                self.g.remove_arc_cells(pu, succ_slot, p);
                self.back_up();
            }
        }
        self.g.mods += 1;
        self.mods = self.g.mods;
        self.current = None;
    }

    fn back_up(&mut self) {
        self.next -= 1;
    }

    /// Undirected self-loop removal under the cursor: both cells of the pair
    /// die. Keeping the visited prefix intact needs care when the partner
    /// cell was already visited.
    fn remove_loop_under_cursor(&mut self, cur: usize) {
        let p = self.p as usize;
        let partner = self.g.positions[p][cur] as usize;
        if partner > cur {
            // partner not yet visited: both removals pull unvisited cells in
            self.g.remove_adj_cell(p, partner);
            self.g.remove_adj_cell(p, cur);
            self.back_up();
        } else {
            // partner already visited (the loop's first cell was yielded
            // earlier): remove the current cell, then fill the visited hole
            // with the last visited cell and the freed boundary with the
            // array tail, so the unvisited suffix stays contiguous.
            self.g.remove_adj_cell(p, cur);
            self.back_up();
            let boundary = self.next as usize; // == cur after back_up
            debug_assert!(partner < boundary);
            if partner + 1 < boundary {
                self.g.move_adj_cell(p, boundary - 1, partner);
            }
            self.g.remove_adj_cell(p, boundary - 1);
            self.next -= 1;
        }
        let v = self.g.vertices[p];
        if let Some(loops) = &mut self.g.self_loops {
            if let Some(c) = loops.get_mut(&v) {
                *c -= 1;
                if *c == 0 {
                    loops.remove(&v);
                }
            }
        }
        self.g.num_edges -= 1;
        self.g.bitset_note_remove(p, v);
    }
}

impl<V: Label, E: Label> Graph<V, E> {
    /// Moves the cell at `from` into the hole at `to` (same list), repairing
    /// the moved cell's mirror. The cell previously at `to` must already be
    /// logically dead.
    fn move_adj_cell(&mut self, p: usize, from: usize, to: usize) {
        let owner = self.vertices[p];
        self.adjacency[p][to] = self.adjacency[p][from];
        self.positions[p][to] = self.positions[p][from];
        if let Some(ew) = &mut self.edge_weights {
            ew[p][to] = ew[p][from];
        }
        if let Some(el) = &mut self.edge_labels {
            el[p][to] = el[p][from].take();
        }
        let w = self.adjacency[p][to];
        let t = self.positions[p][to] as usize;
        let pw = self.expect(w);
        self.positions[pw][t] = to as Slot;
        self.cells_moved += 1;
        self.refresh_moved_label(p, to, owner, from);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn k3() -> Graph {
        let mut g = Graph::new(GraphKind::Graph);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        g
    }

    #[test]
    fn build_k3() {
        let g = k3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.contains_edge(0, 2));
        assert!(!g.contains_edge(0, 0));
        assert_eq!(g.degree(0), 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn default_vertex_sequencing() {
        let mut g = k3();
        assert_eq!(g.add_vertex(), 3);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.add_vertex_with_id(1), Err(GraphError::DuplicateVertex(1)));
    }

    #[test]
    fn explicit_id_materializes_index() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        assert_eq!(g.add_vertex_with_id(7).unwrap(), 7);
        assert!(g.contains_vertex(7));
        assert!(!g.contains_vertex(0));
        assert_eq!(g.index_of(7), Some(0));
        // the counter jumped past the explicit id
        assert_eq!(g.add_vertex(), 8);
        g.check_invariants().unwrap();
    }

    #[test]
    fn remove_vertex_k3() {
        let mut g = k3();
        g.remove_vertex(2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.contains_edge(0, 1));
        g.check_invariants().unwrap();

        let mut single: Graph = Graph::new(GraphKind::Graph);
        single.add_vertex();
        single.remove_vertex(0).unwrap();
        assert_eq!(single.vertex_count(), 0);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn remove_star_center() {
        // star with center 1 and leaves 2..=5
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for v in 1..=5 {
            g.add_vertex_with_id(v).unwrap();
        }
        for leaf in 2..=5 {
            g.add_edge(1, leaf).unwrap();
        }
        g.remove_vertex(1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
        for v in 2..=5 {
            assert_eq!(g.degree(v), 0);
        }
        g.check_invariants().unwrap();
    }

    #[test]
    fn add_edge_constraints() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..4 {
            g.add_vertex();
        }
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoopNotAllowed(0)));
        assert_eq!(g.add_edge(0, 9), Err(GraphError::UnknownVertex(9)));
    }

    #[test]
    fn path_to_cycle() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 3);
        g.check_invariants().unwrap();
    }

    #[test]
    fn pseudograph_loops() {
        let mut g: Graph = Graph::new(GraphKind::Pseudograph);
        g.add_vertex();
        g.add_edge(0, 0).unwrap();
        g.add_edge(0, 0).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.self_loop_count(0), 2);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.multiplicity(0, 0), 2);
        g.check_invariants().unwrap();
        g.remove_edge(0, 0).unwrap();
        assert_eq!(g.self_loop_count(0), 1);
        assert_eq!(g.degree(0), 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn directed_pseudograph_loop() {
        let mut g: Graph = Graph::new(GraphKind::DirectedPseudograph);
        g.add_vertex();
        g.add_edge(0, 0).unwrap();
        assert_eq!(g.outdegree(0), 1);
        assert_eq!(g.indegree(0), 1);
        assert_eq!(g.self_loop_count(0), 1);
        g.check_invariants().unwrap();
        g.remove_edge(0, 0).unwrap();
        assert_eq!(g.edge_count(), 0);
        g.check_invariants().unwrap();
    }

    #[test]
    fn multigraph_removal_peels_one_copy() {
        let mut g: Graph = Graph::new(GraphKind::Multigraph);
        g.add_vertex();
        g.add_vertex();
        for _ in 0..3 {
            g.add_edge(0, 1).unwrap();
        }
        assert_eq!(g.multiplicity(0, 1), 3);
        g.remove_edge(0, 1).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.edge_count(), 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn remove_edge_twice_errors() {
        let mut g = k3();
        g.remove_edge(0, 1).unwrap();
        assert_eq!(g.remove_edge(0, 1), Err(GraphError::UnknownEdge(0, 1)));
        assert_eq!(g.edge_count(), 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn directed_basics() {
        let mut g: Graph = Graph::new(GraphKind::Digraph);
        g.add_vertex();
        g.add_vertex();
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.successors_of(0), &[1]);
        assert!(g.predecessors_of(0).is_empty());
        assert_eq!(g.predecessors_of(1), &[0]);
        assert!(g.contains_edge(0, 1));
        assert!(!g.contains_edge(1, 0));
        g.check_invariants().unwrap();
    }

    #[test]
    fn tournament_degree_identity() {
        // 0 -> 1, 1 -> 2, 0 -> 2: indegrees (0, 1, 2)
        let mut g: Graph = Graph::new(GraphKind::Digraph);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        assert_eq!(
            (0..3).map(|v| g.indegree(v)).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        g.check_invariants().unwrap();
    }

    #[test]
    fn cursor_removes_every_neighbor() {
        let mut g = k3();
        let mut cur = g.neighbor_cursor(0);
        let mut removed = 0;
        while cur.next().is_some() {
            cur.remove();
            removed += 1;
        }
        assert_eq!(removed, 2);
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.edge_count(), 1);
        g.check_invariants().unwrap();
    }

    #[test]
    fn cursor_iteration_totals() {
        // K5: sum of degrees = 2m = 20
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..5 {
            g.add_vertex();
        }
        for v in 0..5 {
            for u in (v + 1)..5 {
                g.add_edge(v, u).unwrap();
            }
        }
        let mut pairs = 0;
        for v in 0..5 {
            pairs += g.neighbor_iter(v).count();
        }
        assert_eq!(pairs, 20);
    }

    #[test]
    fn empty_iteration() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        g.add_vertex();
        assert_eq!(g.neighbor_iter(0).count(), 0);
        let mut cur = g.neighbor_cursor(0);
        assert!(cur.next().is_none());
    }

    #[test]
    fn cursor_loop_removal_after_partner_visited() {
        // loop plus two plain edges; remove the loop at its second cell
        let mut g: Graph = Graph::new(GraphKind::Pseudograph);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_edge(0, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        let mut seen = Vec::new();
        let mut cur = g.neighbor_cursor(0);
        let mut first_loop_cell = true;
        while let Some((u, _)) = cur.next() {
            if u == 0 && !first_loop_cell {
                cur.remove();
            } else {
                if u == 0 {
                    first_loop_cell = false;
                }
                seen.push(u);
            }
        }
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2]); // every live cell seen exactly once
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.self_loop_count(0), 0);
        g.check_invariants().unwrap();
    }

    #[test]
    fn weights_mirror() {
        let mut g = k3();
        g.set_edge_weight(0, 1, 2.5).unwrap();
        assert_eq!(g.edge_weight(1, 0), 2.5);
        // via the neighbor cursor of 1
        let mut cur = g.neighbor_cursor(1);
        while let Some((u, _)) = cur.next() {
            if u == 0 {
                assert_eq!(cur.weight(), 2.5);
            }
        }
        assert_eq!(g.edge_weight(1, 2), 1.0); // untouched edge keeps the default
        g.check_invariants().unwrap();
    }

    #[test]
    fn default_weight_on_unweighted_graph() {
        let g = k3();
        assert_eq!(g.edge_weight(0, 1), DEFAULT_WEIGHT);
    }

    #[test]
    fn vertex_labels_and_lookup() {
        let mut g: Graph<&'static str> = Graph::new(GraphKind::Graph);
        g.add_vertex();
        g.add_vertex();
        g.set_vertex_label(0, "A").unwrap();
        g.set_vertex_label(1, "B").unwrap();
        assert_eq!(g.vertex_label(0), Some(&"A"));
        assert_eq!(g.find_vertex(&"B"), Some(1));
        assert_eq!(g.find_vertex(&"Z"), None);
    }

    #[test]
    fn duplicate_labels_resolve_to_lowest_position() {
        let mut g: Graph<&'static str> = Graph::new(GraphKind::Graph);
        for _ in 0..4 {
            g.add_vertex();
        }
        g.set_vertex_label(3, "X").unwrap();
        g.set_vertex_label(1, "X").unwrap();
        assert_eq!(g.find_vertex(&"X"), Some(1));
        let mut all = g.find_all_vertices(&"X");
        all.sort_unstable();
        assert_eq!(all, vec![1, 3]);
        // map created first, then an earlier vertex gets the label
        let mut g: Graph<&'static str> = Graph::new(GraphKind::Graph);
        for _ in 0..4 {
            g.add_vertex();
        }
        g.set_vertex_label(3, "X").unwrap();
        assert_eq!(g.find_vertex(&"X"), Some(3));
        g.set_vertex_label(1, "X").unwrap();
        assert_eq!(g.find_vertex(&"X"), Some(1));
    }

    #[test]
    fn edge_labels_and_lookup() {
        let mut g: Graph<(), alloc::string::String> = Graph::new(GraphKind::Graph);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_labeled_edge(0, 1, "a".to_string()).unwrap();
        g.add_labeled_edge(1, 2, "b".to_string()).unwrap();
        let e = g.find_edge(&"b".to_string()).unwrap();
        assert_eq!(e.endpoints(), (1, 2));
        assert!(g.find_edge(&"zzz".to_string()).is_none());
        // label survives a removal that relocates cells
        g.remove_edge(0, 1).unwrap();
        let e = g.find_edge(&"b".to_string()).unwrap();
        assert_eq!(e.endpoints(), (1, 2));
        g.check_invariants().unwrap();
        // removing the labeled edge drops the entry
        g.remove_edge(1, 2).unwrap();
        assert!(g.find_edge(&"b".to_string()).is_none());
    }

    #[test]
    fn bitset_activates_at_threshold() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..200 {
            g.add_vertex();
        }
        // ceil(sqrt(200)) = 15
        for u in 1..=14 {
            g.add_edge(0, u).unwrap();
        }
        assert!(!g.bitset_active(0));
        g.add_edge(0, 15).unwrap();
        assert!(g.bitset_active(0));
        let (present, probes) = g.contains_edge_probed(0, 7);
        assert!(present);
        assert_eq!(probes, 1);
        g.check_invariants().unwrap();
        // stays active after removals
        g.remove_edge(0, 7).unwrap();
        assert!(g.bitset_active(0));
        assert!(!g.contains_edge(0, 7));
        g.check_invariants().unwrap();
    }

    #[test]
    fn bitset_threshold_override() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..100 {
            g.add_vertex();
        }
        g.set_bitset_threshold(Some(2));
        g.add_edge(0, 1).unwrap();
        assert!(!g.bitset_active(0));
        g.add_edge(0, 2).unwrap();
        assert!(g.bitset_active(0));
    }

    #[test]
    fn multigraph_bitset_keeps_bit_while_copies_remain() {
        let mut g: Graph = Graph::new(GraphKind::Multigraph);
        for _ in 0..4 {
            g.add_vertex();
        }
        g.set_bitset_threshold(Some(1));
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 1).unwrap();
        assert!(g.bitset_active(0));
        g.remove_edge(0, 1).unwrap();
        assert!(g.contains_edge(0, 1));
        g.remove_edge(0, 1).unwrap();
        assert!(!g.contains_edge(0, 1));
        g.check_invariants().unwrap();
    }

    #[test]
    fn clone_is_deep() {
        let g = k3();
        let mut copy = g.clone();
        copy.remove_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(copy.edge_count(), 2);
        let mut weighted = k3();
        weighted.set_edge_weight(0, 1, 9.0).unwrap();
        let copy = weighted.clone();
        assert_eq!(copy.edge_weight(0, 1), 9.0);
    }

    #[test]
    fn edge_count_is_64_bit() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        g.add_vertex();
        g.add_vertex();
        // force the counter past 2^31 and make sure arithmetic stays exact
        g.num_edges = u64::from(u32::MAX) + 5;
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), u64::from(u32::MAX) + 6);
    }

    #[test]
    fn removal_moves_constant_cells() {
        let mut g: Graph = Graph::new(GraphKind::Graph);
        for _ in 0..50 {
            g.add_vertex();
        }
        for v in 0..50u32 {
            for u in (v + 1)..50 {
                g.add_edge(v, u).unwrap();
            }
        }
        g.reset_cells_moved();
        g.remove_edge(10, 20).unwrap();
        assert!(g.cells_moved() <= 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn edges_iterator_is_canonical_and_complete() {
        let g = k3();
        let pairs: Vec<_> = g.edges().map(|e| e.endpoints()).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);

        let mut d: Graph = Graph::new(GraphKind::Digraph);
        for _ in 0..3 {
            d.add_vertex();
        }
        d.add_edge(2, 0).unwrap();
        d.add_edge(0, 1).unwrap();
        let pairs: Vec<_> = d.edges().map(|e| (e.source, e.target)).collect();
        assert_eq!(pairs, vec![(0, 1), (2, 0)]);
    }
}
