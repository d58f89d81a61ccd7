//! Collections of primitive vertex ids and endpoint pairs.
//!
//! Unlike general-purpose containers these hold no objects, only numbers, so
//! they stay compact and their membership tests run on bit arrays or packed
//! hashes.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::bits::Bitset;
use crate::graph::{Graph, Label, VertexId};

/// An ordered list of vertex ids with positional access; duplicates allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexList {
    items: Vec<VertexId>,
}

impl VertexList {
    pub fn new() -> Self {
        Self { items: Vec::new() }
    }

    pub fn with_capacity(cap: usize) -> Self {
        Self {
            items: Vec::with_capacity(cap),
        }
    }

    pub fn push(&mut self, v: VertexId) {
        self.items.push(v);
    }

    pub fn insert(&mut self, index: usize, v: VertexId) {
        self.items.insert(index, v);
    }

    pub fn get(&self, index: usize) -> Option<VertexId> {
        self.items.get(index).copied()
    }

    pub fn set(&mut self, index: usize, v: VertexId) {
        self.items[index] = v;
    }

    pub fn remove_at(&mut self, index: usize) -> VertexId {
        self.items.remove(index)
    }

    pub fn pop(&mut self) -> Option<VertexId> {
        self.items.pop()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.items.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.items
    }

    pub fn reverse(&mut self) {
        self.items.reverse();
    }

    pub fn sort(&mut self) {
        self.items.sort_unstable();
    }
}

impl From<Vec<VertexId>> for VertexList {
    fn from(items: Vec<VertexId>) -> Self {
        Self { items }
    }
}

impl FromIterator<VertexId> for VertexList {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        Self {
            items: iter.into_iter().collect(),
        }
    }
}

/// A duplicate-free set of vertex ids with O(1) membership via a bit array.
#[derive(Clone, Debug, Default)]
pub struct VertexSet {
    items: Vec<VertexId>,
    membership: Bitset,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Pre-sizes the membership bits for the ids used by `g`.
    pub fn for_graph<V: Label, E: Label>(g: &Graph<V, E>) -> Self {
        let max_id = g.vertices().iter().copied().max().unwrap_or(0);
        Self {
            items: Vec::new(),
            membership: Bitset::with_bits(max_id as usize + 1),
        }
    }

    /// Inserts `v`; false if it was already present.
    pub fn add(&mut self, v: VertexId) -> bool {
        if self.membership.get(v) {
            return false;
        }
        self.membership.set(v);
        self.items.push(v);
        true
    }

    /// Removes `v`; false if it was absent. O(size) to drop it from the
    /// element array.
    pub fn remove(&mut self, v: VertexId) -> bool {
        if !self.membership.get(v) {
            return false;
        }
        self.membership.clear(v);
        let at = self.items.iter().position(|&x| x == v).unwrap();
        self.items.swap_remove(at);
        true
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.membership.get(v)
    }

    /// `contains` plus its probe count — always a single word read.
    pub fn contains_probed(&self, v: VertexId) -> (bool, u32) {
        (self.membership.get(v), 1)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Elements in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.items
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|v| other.contains(v))
    }
}

impl Eq for VertexSet {}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.add(v);
        }
        set
    }
}

/// FIFO queue of vertex ids over a ring buffer.
#[derive(Clone, Debug, Default)]
pub struct VertexQueue {
    items: VecDeque<VertexId>,
}

impl VertexQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn offer(&mut self, v: VertexId) {
        self.items.push_back(v);
    }

    pub fn poll(&mut self) -> Option<VertexId> {
        self.items.pop_front()
    }

    pub fn peek(&self) -> Option<VertexId> {
        self.items.front().copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn clear(&mut self) {
        self.items.clear();
    }
}

/// LIFO stack of vertex ids.
#[derive(Clone, Debug, Default)]
pub struct VertexStack {
    items: Vec<VertexId>,
}

impl VertexStack {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: VertexId) {
        self.items.push(v);
    }

    pub fn pop(&mut self) -> Option<VertexId> {
        self.items.pop()
    }

    pub fn peek(&self) -> Option<VertexId> {
        self.items.last().copied()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn clear(&mut self) {
        self.items.clear();
    }
}

/// A set of endpoint pairs with O(1) expected membership on the packed pair.
/// Undirected sets canonicalize each pair to `(min, max)`.
#[derive(Clone, Debug)]
pub struct EdgeSet {
    directed: bool,
    pairs: Vec<(VertexId, VertexId)>,
    index: HashSet<u64>,
}

#[inline]
fn pack(v: VertexId, u: VertexId) -> u64 {
    (u64::from(v) << 32) | u64::from(u)
}

impl EdgeSet {
    pub fn new_undirected() -> Self {
        Self {
            directed: false,
            pairs: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn new_directed() -> Self {
        Self {
            directed: true,
            pairs: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    fn key(&self, v: VertexId, u: VertexId) -> u64 {
        if self.directed || v <= u {
            pack(v, u)
        } else {
            pack(u, v)
        }
    }

    /// Inserts the pair; false if already present.
    pub fn add(&mut self, v: VertexId, u: VertexId) -> bool {
        if self.index.insert(self.key(v, u)) {
            self.pairs.push(if self.directed || v <= u { (v, u) } else { (u, v) });
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, v: VertexId, u: VertexId) -> bool {
        if self.index.remove(&self.key(v, u)) {
            let canon = if self.directed || v <= u { (v, u) } else { (u, v) };
            let at = self.pairs.iter().position(|&p| p == canon).unwrap();
            self.pairs.swap_remove(at);
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId, u: VertexId) -> bool {
        self.index.contains(&self.key(v, u))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs in insertion order, canonicalized.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_deduplicates() {
        let mut s = VertexSet::new();
        assert!(s.add(3));
        assert!(!s.add(3));
        assert_eq!(s.len(), 1);
        assert!(s.contains(3));
        assert!(!s.contains(4));
        assert!(s.remove(3));
        assert!(!s.remove(3));
        assert!(s.is_empty());
    }

    #[test]
    fn queue_is_fifo() {
        let mut q = VertexQueue::new();
        q.offer(1);
        q.offer(2);
        assert_eq!(q.poll(), Some(1));
        assert_eq!(q.poll(), Some(2));
        assert_eq!(q.poll(), None);
    }

    #[test]
    fn stack_is_lifo() {
        let mut s = VertexStack::new();
        s.push(1);
        s.push(2);
        assert_eq!(s.pop(), Some(2));
        assert_eq!(s.pop(), Some(1));
        assert_eq!(s.pop(), None);
    }

    #[test]
    fn edge_set_canonicalizes_undirected_pairs() {
        let mut es = EdgeSet::new_undirected();
        assert!(es.add(0, 2));
        assert!(es.contains(2, 0));
        assert!(!es.add(2, 0));
        assert_eq!(es.len(), 1);

        let mut ds = EdgeSet::new_directed();
        assert!(ds.add(0, 2));
        assert!(!ds.contains(2, 0));
        assert!(ds.add(2, 0));
        assert_eq!(ds.len(), 2);
    }

    #[test]
    fn vertex_set_contains_is_one_probe() {
        let mut s = VertexSet::new();
        for v in 0..10_000 {
            s.add(v);
        }
        assert_eq!(s.contains_probed(9_999), (true, 1));
        assert_eq!(s.contains_probed(123_456), (false, 1));
    }
}
