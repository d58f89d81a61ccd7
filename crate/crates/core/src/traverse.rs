//! Depth-first and breadth-first traversal, as pull iterators and as
//! visitor-driven traversers.
//!
//! Iterators yield [`SearchNode`]s carrying the tree context of each visited
//! vertex: parent, level, visit order and component. When a component is
//! exhausted the traversal restarts from the lowest-position unvisited vertex
//! with the next component id. Neighbor expansion follows adjacency slot
//! order, so results are deterministic for a given insertion history.
//!
//! Traversers push the same search through a [`TraversalVisitor`], classifying
//! every explored edge; any callback can stop the search by returning
//! `ControlFlow::Break(())`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::Bitset;
use crate::graph::{Graph, Label, Slot, VertexId};

/// Per-vertex record of a DFS or BFS tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchNode {
    pub vertex: VertexId,
    /// Tree parent; `None` for component roots.
    pub parent: Option<VertexId>,
    /// Hop depth below the component root. For BFS this is the unweighted
    /// distance from the component's start vertex.
    pub level: u32,
    /// 0-based visit time over the whole traversal.
    pub order: u32,
    /// Index of the search tree containing this vertex; the start vertex is
    /// in component 0.
    pub component: u32,
}

/// Callbacks invoked while a traverser explores the graph. All default to
/// no-ops; return `Break` from any of them to interrupt the search.
///
/// Edge classification: DFS on digraphs fires `tree`/`back`/`forward`/`cross`
/// in the classic sense; undirected DFS fires only `tree` and `back`, each
/// edge classified once. BFS fires `tree_edge` on first discovery; every
/// other explored edge is a `cross_edge`, except self-loops (`back_edge`) and
/// digraph arcs into a strictly lower level (`upward_edge`). Together the
/// callbacks see every explored edge exactly once.
#[allow(unused_variables)]
pub trait TraversalVisitor {
    fn start_vertex(&mut self, node: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn finish_vertex(&mut self, node: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn tree_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn back_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn forward_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn cross_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn upward_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
}

fn start_position<V: Label, E: Label>(g: &Graph<V, E>, start: Option<VertexId>) -> Option<u32> {
    match start {
        Some(v) => Some(
            g.index_of(v)
                .unwrap_or_else(|| panic!("unknown start vertex {v}")),
        ),
        None => (g.vertex_count() > 0).then_some(0),
    }
}

/// Preorder DFS over the whole graph.
pub struct DfsIterator<'g, V: Label = (), E: Label = ()> {
    g: &'g Graph<V, E>,
    visited: Bitset,
    stack: Vec<Frame>,
    /// Positions below this have been offered as restart roots.
    scan: u32,
    pending_root: Option<u32>,
    order: u32,
    roots_started: u32,
}

struct Frame {
    pos: u32,
    slot: usize,
    node: SearchNode,
}

impl<'g, V: Label, E: Label> DfsIterator<'g, V, E> {
    pub fn new(g: &'g Graph<V, E>, start: Option<VertexId>) -> Self {
        Self {
            g,
            visited: Bitset::with_bits(g.vertex_count()),
            stack: Vec::new(),
            scan: 0,
            pending_root: start_position(g, start),
            order: 0,
            roots_started: 0,
        }
    }

    fn next_root(&mut self) -> Option<u32> {
        if let Some(p) = self.pending_root.take() {
            if !self.visited.get(p) {
                return Some(p);
            }
        }
        while (self.scan as usize) < self.g.vertex_count() {
            let p = self.scan;
            self.scan += 1;
            if !self.visited.get(p) {
                return Some(p);
            }
        }
        None
    }
}

impl<V: Label, E: Label> Iterator for DfsIterator<'_, V, E> {
    type Item = SearchNode;

    fn next(&mut self) -> Option<SearchNode> {
        loop {
            if self.stack.is_empty() {
                let p = self.next_root()?;
                self.visited.set(p);
                let node = SearchNode {
                    vertex: self.g.vertex_at(p),
                    parent: None,
                    level: 0,
                    order: self.order,
                    component: self.roots_started,
                };
                self.order += 1;
                self.roots_started += 1;
                self.stack.push(Frame { pos: p, slot: 0, node });
                return Some(node);
            }
            let top = self.stack.len() - 1;
            let pos = self.stack[top].pos;
            let list = self.g.neighbors_at(pos);
            let mut slot = self.stack[top].slot;
            let mut found = None;
            while slot < list.len() {
                let u = list[slot];
                slot += 1;
                let pu = self.g.index_of(u).expect("adjacency names live vertices");
                if !self.visited.get(pu) {
                    found = Some((u, pu));
                    break;
                }
            }
            self.stack[top].slot = slot;
            match found {
                Some((u, pu)) => {
                    self.visited.set(pu);
                    let parent = self.stack[top].node;
                    let node = SearchNode {
                        vertex: u,
                        parent: Some(parent.vertex),
                        level: parent.level + 1,
                        order: self.order,
                        component: parent.component,
                    };
                    self.order += 1;
                    self.stack.push(Frame { pos: pu, slot: 0, node });
                    return Some(node);
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// Level-order BFS over the whole graph.
pub struct BfsIterator<'g, V: Label = (), E: Label = ()> {
    g: &'g Graph<V, E>,
    visited: Bitset,
    queue: VecDeque<(u32, SearchNode)>,
    slot: usize,
    scan: u32,
    pending_root: Option<u32>,
    order: u32,
    roots_started: u32,
}

impl<'g, V: Label, E: Label> BfsIterator<'g, V, E> {
    pub fn new(g: &'g Graph<V, E>, start: Option<VertexId>) -> Self {
        Self {
            g,
            visited: Bitset::with_bits(g.vertex_count()),
            queue: VecDeque::new(),
            slot: 0,
            scan: 0,
            pending_root: start_position(g, start),
            order: 0,
            roots_started: 0,
        }
    }

    fn next_root(&mut self) -> Option<u32> {
        if let Some(p) = self.pending_root.take() {
            if !self.visited.get(p) {
                return Some(p);
            }
        }
        while (self.scan as usize) < self.g.vertex_count() {
            let p = self.scan;
            self.scan += 1;
            if !self.visited.get(p) {
                return Some(p);
            }
        }
        None
    }
}

impl<V: Label, E: Label> Iterator for BfsIterator<'_, V, E> {
    type Item = SearchNode;

    fn next(&mut self) -> Option<SearchNode> {
        loop {
            if let Some(&(pos, node)) = self.queue.front() {
                let list = self.g.neighbors_at(pos);
                while self.slot < list.len() {
                    let u = list[self.slot];
                    self.slot += 1;
                    let pu = self.g.index_of(u).expect("adjacency names live vertices");
                    if !self.visited.get(pu) {
                        self.visited.set(pu);
                        let child = SearchNode {
                            vertex: u,
                            parent: Some(node.vertex),
                            level: node.level + 1,
                            order: self.order,
                            component: node.component,
                        };
                        self.order += 1;
                        self.queue.push_back((pu, child));
                        return Some(child);
                    }
                }
                self.queue.pop_front();
                self.slot = 0;
                continue;
            }
            let p = self.next_root()?;
            self.visited.set(p);
            let node = SearchNode {
                vertex: self.g.vertex_at(p),
                parent: None,
                level: 0,
                order: self.order,
                component: self.roots_started,
            };
            self.roots_started += 1;
            self.order += 1;
            self.queue.push_back((p, node));
            return Some(node);
        }
    }
}

pub fn dfs_iter<V: Label, E: Label>(
    g: &Graph<V, E>,
    start: Option<VertexId>,
) -> DfsIterator<'_, V, E> {
    DfsIterator::new(g, start)
}

pub fn bfs_iter<V: Label, E: Label>(
    g: &Graph<V, E>,
    start: Option<VertexId>,
) -> BfsIterator<'_, V, E> {
    BfsIterator::new(g, start)
}

const WHITE: u8 = 0;
const GRAY: u8 = 1;
const BLACK: u8 = 2;

struct TraverseFrame {
    pos: u32,
    slot: usize,
    /// Undirected: the mirror slot of the tree edge that discovered this
    /// vertex, skipped during expansion so the tree edge is not re-reported.
    skip_slot: Option<Slot>,
}

/// Runs a depth-first search, pushing events into `visitor`. Returns `Break`
/// if the visitor interrupted the traversal.
pub fn dfs_traverse<V: Label, E: Label, Vis: TraversalVisitor>(
    g: &Graph<V, E>,
    start: Option<VertexId>,
    visitor: &mut Vis,
) -> ControlFlow<()> {
    let n = g.vertex_count();
    let mut color = alloc::vec![WHITE; n];
    let mut nodes: Vec<Option<SearchNode>> = alloc::vec![None; n];
    let mut order = 0u32;
    let mut component = 0u32;
    let mut stack: Vec<TraverseFrame> = Vec::new();
    let directed = g.is_directed();

    let mut roots = start_position(g, start).into_iter().chain(0..n as u32);
    loop {
        let Some(root) = roots.find(|&p| color[p as usize] == WHITE) else {
            return ControlFlow::Continue(());
        };
        let node = SearchNode {
            vertex: g.vertex_at(root),
            parent: None,
            level: 0,
            order,
            component,
        };
        order += 1;
        component += 1;
        color[root as usize] = GRAY;
        nodes[root as usize] = Some(node);
        visitor.start_vertex(&node)?;
        stack.push(TraverseFrame {
            pos: root,
            slot: 0,
            skip_slot: None,
        });
        while let Some(top) = stack.last() {
            let pos = top.pos;
            let skip = top.skip_slot;
            let mut slot = top.slot;
            let list = g.neighbors_at(pos);
            let from = nodes[pos as usize].unwrap();
            let mut advanced = false;
            while slot < list.len() {
                let s = slot;
                let u = list[s];
                slot += 1;
                let pu = g.index_of(u).expect("adjacency names live vertices") as usize;
                if color[pu] == WHITE {
                    let node = SearchNode {
                        vertex: u,
                        parent: Some(from.vertex),
                        level: from.level + 1,
                        order,
                        component: from.component,
                    };
                    order += 1;
                    color[pu] = GRAY;
                    nodes[pu] = Some(node);
                    visitor.tree_edge(&from, &node)?;
                    visitor.start_vertex(&node)?;
                    stack.last_mut().unwrap().slot = slot;
                    let skip_slot = (!directed).then(|| g.mirror_slot(pos, s as Slot));
                    stack.push(TraverseFrame {
                        pos: pu as u32,
                        slot: 0,
                        skip_slot,
                    });
                    advanced = true;
                    break;
                }
                let to = nodes[pu].unwrap();
                if directed {
                    if color[pu] == GRAY {
                        visitor.back_edge(&from, &to)?;
                    } else if to.order > from.order {
                        visitor.forward_edge(&from, &to)?;
                    } else {
                        visitor.cross_edge(&from, &to)?;
                    }
                } else if Some(s as Slot) == skip {
                    // the tree edge that discovered this vertex
                } else if u == from.vertex {
                    // each loop pair reports once, at its first cell
                    if g.mirror_slot(pos, s as Slot) > s as Slot {
                        visitor.back_edge(&from, &from)?;
                    }
                } else if to.order < from.order {
                    visitor.back_edge(&from, &to)?;
                }
                // otherwise the mirror cell already reported this edge
            }
            if !advanced {
                stack.last_mut().unwrap().slot = slot;
                color[pos as usize] = BLACK;
                stack.pop();
                visitor.finish_vertex(&from)?;
            }
        }
    }
}

/// Runs a breadth-first search, pushing events into `visitor`. Returns
/// `Break` if the visitor interrupted the traversal.
pub fn bfs_traverse<V: Label, E: Label, Vis: TraversalVisitor>(
    g: &Graph<V, E>,
    start: Option<VertexId>,
    visitor: &mut Vis,
) -> ControlFlow<()> {
    let n = g.vertex_count();
    let mut visited = Bitset::with_bits(n);
    let mut nodes: Vec<Option<SearchNode>> = alloc::vec![None; n];
    let mut skip_slots: Vec<Option<Slot>> = alloc::vec![None; n];
    let mut order = 0u32;
    let mut component = 0u32;
    let mut queue: VecDeque<u32> = VecDeque::new();
    let directed = g.is_directed();

    let mut roots = start_position(g, start).into_iter().chain(0..n as u32);
    loop {
        let Some(root) = roots.find(|&p| !visited.get(p)) else {
            return ControlFlow::Continue(());
        };
        let node = SearchNode {
            vertex: g.vertex_at(root),
            parent: None,
            level: 0,
            order,
            component,
        };
        order += 1;
        component += 1;
        visited.set(root);
        nodes[root as usize] = Some(node);
        visitor.start_vertex(&node)?;
        queue.push_back(root);
        while let Some(pos) = queue.pop_front() {
            let from = nodes[pos as usize].unwrap();
            let skip = skip_slots[pos as usize];
            for s in 0..g.neighbors_at(pos).len() {
                let u = g.neighbors_at(pos)[s];
                let pu = g.index_of(u).expect("adjacency names live vertices");
                if !visited.get(pu) {
                    let node = SearchNode {
                        vertex: u,
                        parent: Some(from.vertex),
                        level: from.level + 1,
                        order,
                        component: from.component,
                    };
                    order += 1;
                    visited.set(pu);
                    nodes[pu as usize] = Some(node);
                    if !directed {
                        skip_slots[pu as usize] = Some(g.mirror_slot(pos, s as Slot));
                    }
                    visitor.tree_edge(&from, &node)?;
                    visitor.start_vertex(&node)?;
                    queue.push_back(pu);
                    continue;
                }
                let to = nodes[pu as usize].unwrap();
                if u == from.vertex {
                    // self-loop: report once
                    if directed || g.mirror_slot(pos, s as Slot) > s as Slot {
                        visitor.back_edge(&from, &from)?;
                    }
                } else if directed {
                    if to.level < from.level {
                        visitor.upward_edge(&from, &to)?;
                    } else {
                        visitor.cross_edge(&from, &to)?;
                    }
                } else if Some(s as Slot) == skip {
                    // tree edge mirror
                } else if to.order > from.order {
                    visitor.cross_edge(&from, &to)?;
                }
                // else: the earlier-expanded endpoint already reported it
            }
            visitor.finish_vertex(&from)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::GraphBuilder;
    use crate::kind::GraphKind;
    use alloc::vec;
    use alloc::vec::Vec;

    fn undirected(n: u32, edges: &[(u32, u32)]) -> Graph {
        let mut b = GraphBuilder::new(GraphKind::Graph).num_vertices(n);
        for &(v, u) in edges {
            b = b.edge(v, u);
        }
        b.build().unwrap()
    }

    fn digraph(n: u32, arcs: &[(u32, u32)]) -> Graph {
        let mut b = GraphBuilder::new(GraphKind::Digraph).num_vertices(n);
        for &(v, u) in arcs {
            b = b.edge(v, u);
        }
        b.build().unwrap()
    }

    #[test]
    fn dfs_c3_slot_order() {
        // 0's list is [1, 2]: the walk dives 0, 1, 2 with levels 0, 1, 2
        let g = undirected(3, &[(0, 1), (0, 2), (1, 2)]);
        let nodes: Vec<_> = dfs_iter(&g, Some(0)).collect();
        assert_eq!(
            nodes.iter().map(|n| n.vertex).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(
            nodes.iter().map(|n| n.level).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(
            nodes.iter().map(|n| n.order).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn dfs_components() {
        let g = undirected(4, &[(0, 1), (2, 3)]);
        let nodes: Vec<_> = dfs_iter(&g, Some(0)).collect();
        let comp_of = |v: u32| nodes.iter().find(|n| n.vertex == v).unwrap().component;
        assert_eq!(comp_of(0), 0);
        assert_eq!(comp_of(1), 0);
        assert_eq!(comp_of(2), 1);
        assert_eq!(comp_of(3), 1);
    }

    #[test]
    fn dfs_empty_graph() {
        let g = undirected(0, &[]);
        assert_eq!(dfs_iter(&g, None).count(), 0);
    }

    #[test]
    fn bfs_star_levels() {
        let g = undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let nodes: Vec<_> = bfs_iter(&g, Some(0)).collect();
        assert_eq!(nodes[0].level, 0);
        assert!(nodes[1..].iter().all(|n| n.level == 1));
    }

    #[test]
    fn bfs_path_levels() {
        let g = undirected(4, &[(0, 1), (1, 2), (2, 3)]);
        let levels: Vec<_> = bfs_iter(&g, Some(0)).map(|n| n.level).collect();
        assert_eq!(levels, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bfs_cycle_radius() {
        let g = undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        for start in 0..5 {
            let max = bfs_iter(&g, Some(start)).map(|n| n.level).max().unwrap();
            assert_eq!(max, 2);
        }
    }

    #[test]
    fn every_vertex_yielded_once() {
        let g = undirected(6, &[(0, 1), (1, 2), (3, 4)]);
        for iter_nodes in [
            dfs_iter(&g, None).collect::<Vec<_>>(),
            bfs_iter(&g, None).collect::<Vec<_>>(),
        ] {
            let mut seen: Vec<_> = iter_nodes.iter().map(|n| n.vertex).collect();
            seen.sort_unstable();
            assert_eq!(seen, vec![0, 1, 2, 3, 4, 5]);
            let mut orders: Vec<_> = iter_nodes.iter().map(|n| n.order).collect();
            orders.sort_unstable();
            assert_eq!(orders, (0..6).collect::<Vec<_>>());
        }
    }

    #[derive(Default)]
    struct Recorder {
        tree: Vec<(u32, u32)>,
        back: Vec<(u32, u32)>,
        forward: Vec<(u32, u32)>,
        cross: Vec<(u32, u32)>,
        upward: Vec<(u32, u32)>,
        started: Vec<u32>,
        finished: Vec<u32>,
        interrupt_at: Option<usize>,
    }

    impl TraversalVisitor for Recorder {
        fn start_vertex(&mut self, node: &SearchNode) -> ControlFlow<()> {
            self.started.push(node.vertex);
            if Some(self.started.len()) == self.interrupt_at {
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        }
        fn finish_vertex(&mut self, node: &SearchNode) -> ControlFlow<()> {
            self.finished.push(node.vertex);
            ControlFlow::Continue(())
        }
        fn tree_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
            self.tree.push((from.vertex, to.vertex));
            ControlFlow::Continue(())
        }
        fn back_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
            self.back.push((from.vertex, to.vertex));
            ControlFlow::Continue(())
        }
        fn forward_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
            self.forward.push((from.vertex, to.vertex));
            ControlFlow::Continue(())
        }
        fn cross_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
            self.cross.push((from.vertex, to.vertex));
            ControlFlow::Continue(())
        }
        fn upward_edge(&mut self, from: &SearchNode, to: &SearchNode) -> ControlFlow<()> {
            self.upward.push((from.vertex, to.vertex));
            ControlFlow::Continue(())
        }
    }

    #[test]
    fn dfs_dag_classification() {
        // 0 -> 1, 0 -> 2, 1 -> 2 expanding in slot order:
        // tree(0,1), tree(1,2), forward(0,2)
        let g = digraph(3, &[(0, 1), (0, 2), (1, 2)]);
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(rec.tree, vec![(0, 1), (1, 2)]);
        assert_eq!(rec.forward, vec![(0, 2)]);
        assert!(rec.back.is_empty() && rec.cross.is_empty());
    }

    #[test]
    fn dfs_triangle_undirected_classification() {
        let g = undirected(3, &[(0, 1), (1, 2), (0, 2)]);
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(rec.tree.len(), 2);
        assert_eq!(rec.back.len(), 1);
        assert!(rec.forward.is_empty() && rec.cross.is_empty());
    }

    #[test]
    fn dfs_interrupt_counts_started() {
        let g = undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let mut rec = Recorder {
            interrupt_at: Some(3),
            ..Default::default()
        };
        let flow = dfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(flow, ControlFlow::Break(()));
        assert_eq!(rec.started.len(), 3);
    }

    #[test]
    fn classification_partitions_all_edges() {
        // directed: tree + back + forward + cross == m
        let g = digraph(
            6,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 1), (2, 4), (5, 0)],
        );
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, None, &mut rec);
        let total = rec.tree.len() + rec.back.len() + rec.forward.len() + rec.cross.len();
        assert_eq!(total as u64, g.edge_count());

        // undirected: tree + back == m, no forward/cross
        let g = undirected(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 5)]);
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, None, &mut rec);
        assert_eq!((rec.tree.len() + rec.back.len()) as u64, g.edge_count());
        assert!(rec.forward.is_empty() && rec.cross.is_empty());
    }

    #[test]
    fn bfs_classification_partitions_all_edges() {
        let g = undirected(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (4, 5)]);
        let mut rec = Recorder::default();
        let _ = bfs_traverse(&g, Some(0), &mut rec);
        assert_eq!((rec.tree.len() + rec.cross.len()) as u64, g.edge_count());
        assert_eq!(rec.tree.len(), 4); // spanning forest: 3 + 1 edges

        let g = digraph(4, &[(0, 1), (0, 2), (1, 3), (3, 0), (2, 3)]);
        let mut rec = Recorder::default();
        let _ = bfs_traverse(&g, Some(0), &mut rec);
        let total = rec.tree.len() + rec.cross.len() + rec.upward.len() + rec.back.len();
        assert_eq!(total as u64, g.edge_count());
        assert_eq!(rec.upward, vec![(3, 0)]);
    }

    #[test]
    fn iterator_and_traverser_agree_on_order() {
        let g = undirected(7, &[(0, 1), (0, 2), (1, 3), (2, 4), (5, 6)]);
        let iter_order: Vec<_> = dfs_iter(&g, Some(0)).map(|n| n.vertex).collect();
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(iter_order, rec.started);

        let iter_order: Vec<_> = bfs_iter(&g, Some(0)).map(|n| n.vertex).collect();
        let mut rec = Recorder::default();
        let _ = bfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(iter_order, rec.started);
    }

    #[test]
    fn pseudograph_loop_reports_one_back_edge() {
        let mut g: Graph = GraphBuilder::new(GraphKind::Pseudograph)
            .num_vertices(2)
            .edge(0, 1)
            .build()
            .unwrap();
        g.add_edge(0, 0).unwrap();
        let mut rec = Recorder::default();
        let _ = dfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(rec.back, vec![(0, 0)]);
        let mut rec = Recorder::default();
        let _ = bfs_traverse(&g, Some(0), &mut rec);
        assert_eq!(rec.back, vec![(0, 0)]);
    }
}
