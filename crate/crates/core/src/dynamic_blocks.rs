//! Incremental block and component counts under edge insertion.
//!
//! Each inserted edge falls into one of three cases:
//!
//! * both endpoints already share a multi-vertex block: nothing changes;
//! * the endpoints lie in different components: the components join and the
//!   edge becomes a bridge, leaving the block count untouched;
//! * the endpoints lie in the same component but in different blocks: every
//!   block, bridge and singleton along the shortest path between them (taken
//!   before the edge is inserted) is welded with the new edge into a single
//!   block.
//!
//! Components live in a union-find forest. Blocks are tracked through an
//! edge-to-block map and per-vertex block membership lists; a merge relabels
//! the smaller blocks into the largest one.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::labelled_graph::{Label, LabelledGraph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrackerError {
    #[error("tracker needs at least one vertex")]
    Empty,
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(Vertex, Vertex),
}

/// How an inserted edge related to the graph before insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertCase {
    SameBlock,
    BridgeJoin,
    BlockMerge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeClass {
    Bridge,
    Block(usize),
}

#[derive(Debug, Clone, Default)]
struct BlockData {
    edges: Vec<(Vertex, Vertex)>,
    vertices: Vec<Vertex>,
}

#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Working state of the greedy: the edges inserted so far and the
/// block/component bookkeeping derived from them.
#[derive(Debug, Clone)]
pub struct TrackerState {
    n: usize,
    components: UnionFind,
    component_count: usize,
    edge_class: HashMap<(Vertex, Vertex), EdgeClass>,
    /// Slots of merged-away blocks are left as `None`.
    blocks: Vec<Option<BlockData>>,
    multi_block_count: usize,
    /// Multi-vertex blocks containing each vertex; empty means singleton.
    vertex_blocks: Vec<Vec<usize>>,
    singleton_count: usize,
    adjacency: Vec<Vec<Vertex>>,
    journal: Vec<(Vertex, Vertex)>,
}

impl TrackerState {
    /// Every vertex starts as its own block and its own component.
    pub fn new(n: usize) -> Result<Self, TrackerError> {
        if n == 0 {
            return Err(TrackerError::Empty);
        }
        Ok(TrackerState {
            n,
            components: UnionFind::new(n),
            component_count: n,
            edge_class: HashMap::new(),
            blocks: Vec::new(),
            multi_block_count: 0,
            vertex_blocks: vec![Vec::new(); n],
            singleton_count: n,
            adjacency: vec![Vec::new(); n],
            journal: Vec::new(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `(block_count, component_count)`.
    pub fn counts(&self) -> (usize, usize) {
        (self.block_count(), self.component_count)
    }

    pub fn block_count(&self) -> usize {
        self.multi_block_count + self.singleton_count
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Edges in insertion order, normalized `u < v`.
    pub fn journal(&self) -> &[(Vertex, Vertex)] {
        &self.journal
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_class.contains_key(&key)
    }

    /// Spanning and bi-connected (or a single vertex).
    pub fn is_spanning_biconnected(&self) -> bool {
        self.counts() == (1, 1) && self.n != 2
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<InsertCase, TrackerError> {
        if u == v {
            return Err(TrackerError::SelfLoop(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(TrackerError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if self.edge_class.contains_key(&key) {
            return Err(TrackerError::DuplicateEdge(key.0, key.1));
        }

        let case = if self.components.find(u) != self.components.find(v) {
            self.components.union(u, v);
            self.component_count -= 1;
            self.edge_class.insert(key, EdgeClass::Bridge);
            InsertCase::BridgeJoin
        } else if let Some(b) = self.shared_block(u, v) {
            self.edge_class.insert(key, EdgeClass::Block(b));
            self.blocks[b].as_mut().expect("live block").edges.push(key);
            InsertCase::SameBlock
        } else {
            let path = self.shortest_path(u, v);
            self.weld(&path, key);
            InsertCase::BlockMerge
        };

        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let pos = list.partition_point(|&x| x < b);
            list.insert(pos, b);
        }
        self.journal.push(key);
        Ok(case)
    }

    /// `(blocks_after, components_after)` if every edge of `label` were
    /// inserted in canonical order. Edges already present are skipped.
    /// The state itself is left untouched.
    pub fn evaluate_label(&self, g: &LabelledGraph, label: Label) -> (usize, usize) {
        let mut probe = self.clone();
        probe.add_label(g, label);
        probe.counts()
    }

    /// Inserts every edge of `label` not already present.
    pub fn add_label(&mut self, g: &LabelledGraph, label: Label) {
        for e in g.edges_with_label(label) {
            if !self.contains_edge(e.u, e.v) {
                self.add_edge(e.u, e.v).expect("validated instance edge");
            }
        }
    }

    fn shared_block(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let (bu, bv) = (&self.vertex_blocks[u], &self.vertex_blocks[v]);
        bu.iter().copied().find(|b| bv.contains(b))
    }

    fn shortest_path(&self, s: Vertex, t: Vertex) -> Vec<Vertex> {
        let mut pred = vec![usize::MAX; self.n];
        pred[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &w in &self.adjacency[x] {
                if pred[w] == usize::MAX {
                    pred[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![t];
        let mut x = t;
        while x != s {
            x = pred[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    /// Coalesces everything along `path` plus the new edge into one block.
    fn weld(&mut self, path: &[Vertex], new_edge: (Vertex, Vertex)) {
        let mut merged: Vec<usize> = Vec::new();
        let mut bridges = Vec::new();
        for w in path.windows(2) {
            let key = if w[0] < w[1] {
                (w[0], w[1])
            } else {
                (w[1], w[0])
            };
            match self.edge_class[&key] {
                EdgeClass::Bridge => bridges.push(key),
                EdgeClass::Block(b) => {
                    if !merged.contains(&b) {
                        merged.push(b);
                    }
                }
            }
        }

        let target = match merged
            .iter()
            .copied()
            .max_by_key(|&b| self.blocks[b].as_ref().map_or(0, |d| d.edges.len()))
        {
            Some(b) => b,
            None => {
                self.blocks.push(Some(BlockData::default()));
                self.multi_block_count += 1;
                self.blocks.len() - 1
            }
        };

        let mut target_data = self.blocks[target].take().expect("live block");
        for &b in merged.iter().filter(|&&b| b != target) {
            let data = self.blocks[b].take().expect("live block");
            for &e in &data.edges {
                self.edge_class.insert(e, EdgeClass::Block(target));
            }
            target_data.edges.extend(data.edges);
            for x in data.vertices {
                let list = &mut self.vertex_blocks[x];
                list.retain(|&y| y != b);
                if !list.contains(&target) {
                    list.push(target);
                    target_data.vertices.push(x);
                }
            }
            self.multi_block_count -= 1;
        }

        for e in bridges.into_iter().chain(std::iter::once(new_edge)) {
            self.edge_class.insert(e, EdgeClass::Block(target));
            target_data.edges.push(e);
        }
        for &x in path {
            let list = &mut self.vertex_blocks[x];
            if list.contains(&target) {
                continue;
            }
            if list.is_empty() {
                self.singleton_count -= 1;
            }
            list.push(target);
            target_data.vertices.push(x);
        }
        self.blocks[target] = Some(target_data);
    }
}
