//! Connected components, cut vertices, bridges and blocks of a plain graph.
//!
//! Blocks follow the convention used by the solvers: a block is a
//! bi-connected component with at least three vertices, and every vertex
//! that lies in no such component forms a singleton block on its own.
//! Bridges are never blocks. Multi-vertex block edges and bridges
//! together partition the edge set.

use std::collections::VecDeque;

use crate::labelled_graph::{PlainGraph, Vertex};

const UNSEEN: usize = usize::MAX;

/// A bi-connected component with at least three vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Ascending vertex ids.
    pub vertices: Vec<Vertex>,
    /// Ascending `(u, v)` pairs with `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub component_id: Vec<usize>,
    pub component_count: usize,
    /// Ordered by the ascending vertex list of each block.
    pub blocks: Vec<Block>,
    pub singleton_block_vertices: Vec<Vertex>,
    pub bridges: Vec<(Vertex, Vertex)>,
    pub cut_vertices: Vec<Vertex>,
}

impl Decomposition {
    /// Multi-vertex blocks plus singleton blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len() + self.singleton_block_vertices.len()
    }
}

/// Component count and per-vertex component ids, numbered in order of first
/// visit when scanning roots in ascending order.
pub fn components(g: &PlainGraph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut id = vec![UNSEEN; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if id[root] != UNSEEN {
            continue;
        }
        id[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v) {
                if id[w] == UNSEEN {
                    id[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, id)
}

pub fn is_connected(g: &PlainGraph) -> bool {
    g.vertex_count() > 0 && components(g).0 == 1
}

struct Frame {
    v: Vertex,
    parent_edge: usize,
    next: usize,
}

/// Single DFS pass computing low-points, cut vertices and the edge-stack
/// block split.
pub fn decompose(g: &PlainGraph) -> Decomposition {
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut component_id = vec![UNSEEN; n];
    let mut is_cut = vec![false; n];
    let mut in_block = vec![false; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();
    let mut timer = 0;
    let mut component_count = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        component_id[root] = component_count;
        let mut root_children = 0;
        frames.push(Frame {
            v: root,
            parent_edge: UNSEEN,
            next: 0,
        });

        while let Some(top) = frames.last_mut() {
            let v = top.v;
            if let Some(&(w, e)) = g.adjacent(v).get(top.next) {
                top.next += 1;
                if e == top.parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    component_id[w] = component_count;
                    edge_stack.push(e);
                    if v == root {
                        root_children += 1;
                    }
                    frames.push(Frame {
                        v: w,
                        parent_edge: e,
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    // back edge to an ancestor
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }

            let finished = frames.pop().expect("frame present");
            let Some(parent) = frames.last() else { break };
            let p = parent.v;
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p != root {
                    is_cut[p] = true;
                }
                let mut group = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    group.push(e);
                    if e == finished.parent_edge {
                        break;
                    }
                }
                if group.len() == 1 {
                    bridges.push(g.edges()[group[0]]);
                } else {
                    let mut edges: Vec<_> = group.iter().map(|&e| g.edges()[e]).collect();
                    edges.sort_unstable();
                    let mut vertices: Vec<_> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    for &x in &vertices {
                        in_block[x] = true;
                    }
                    blocks.push(Block { vertices, edges });
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
        component_count += 1;
    }

    blocks.sort_unstable_by(|a, b| a.vertices.cmp(&b.vertices));
    bridges.sort_unstable();
    Decomposition {
        component_id,
        component_count,
        blocks,
        singleton_block_vertices: (0..n).filter(|&v| !in_block[v]).collect(),
        bridges,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Two vertex-disjoint paths between every pair. A single vertex counts as
/// bi-connected; two vertices never do in a simple graph.
pub fn is_biconnected(g: &PlainGraph) -> bool {
    match g.vertex_count() {
        0 => false,
        1 => true,
        2 => false,
        n => {
            if g.edge_count() < n {
                return false;
            }
            let d = decompose(g);
            d.component_count == 1 && d.cut_vertices.is_empty()
        }
    }
}

/// Minimum-hop path from `s` to `t`, neighbours explored in ascending order.
pub fn bfs_shortest_path(g: &PlainGraph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    if s == t {
        return Some(vec![s]);
    }
    let mut pred = vec![UNSEEN; g.vertex_count()];
    pred[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbours(v) {
            if pred[w] != UNSEEN {
                continue;
            }
            pred[w] = v;
            if w == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = pred[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> PlainGraph {
        PlainGraph::from_edges(n, edges.iter().copied())
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            components(&graph(3, &[(0, 1), (1, 2), (0, 2)])),
            (1, vec![0, 0, 0])
        );
        assert_eq!(components(&graph(3, &[])), (3, vec![0, 1, 2]));
        assert_eq!(components(&graph(3, &[(0, 1)])), (2, vec![0, 0, 1]));
    }

    #[test]
    fn path_has_only_bridges() {
        let d = decompose(&graph(3, &[(0, 1), (1, 2)]));
        assert!(d.blocks.is_empty());
        assert_eq!(d.singleton_block_vertices, vec![0, 1, 2]);
        assert_eq!(d.bridges, vec![(0, 1), (1, 2)]);
        assert_eq!(d.cut_vertices, vec![1]);
        assert_eq!(d.block_count(), 3);
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let d = decompose(&graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(d.blocks[1].vertices, vec![2, 3, 4]);
        assert!(d.singleton_block_vertices.is_empty());
        assert!(d.bridges.is_empty());
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.block_count(), 2);
    }

    #[test]
    fn triangle_is_one_block() {
        let d = decompose(&graph(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].edges, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(d.bridges.is_empty());
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.block_count(), 1);
    }

    #[test]
    fn root_with_two_children_is_cut() {
        // star centred at the DFS root
        let d = decompose(&graph(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.block_count(), 4);
    }

    #[test]
    fn triangle_with_pendant_and_isolated_vertex() {
        let d = decompose(&graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3)]));
        assert_eq!(d.component_count, 2);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.singleton_block_vertices, vec![3, 4]);
        assert_eq!(d.bridges, vec![(2, 3)]);
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.block_count(), 3);
    }

    #[test]
    fn edgeless_graph_has_n_blocks() {
        let d = decompose(&graph(4, &[]));
        assert_eq!(d.block_count(), 4);
        assert_eq!(d.component_count, 4);
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let n = 200_000;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let d = decompose(&graph(n, &edges));
        assert_eq!(d.bridges.len(), n - 1);
        assert_eq!(d.cut_vertices.len(), n - 2);
    }

    #[test]
    fn biconnectivity_predicate() {
        assert!(is_biconnected(&graph(3, &[(0, 1), (1, 2), (0, 2)])));
        assert!(!is_biconnected(&graph(3, &[(0, 1), (1, 2)])));
        assert!(!is_biconnected(&graph(2, &[(0, 1)])));
        assert!(is_biconnected(&graph(1, &[])));
        assert!(!is_biconnected(&graph(0, &[])));
        // two disjoint triangles: no cut vertex but disconnected
        assert!(!is_biconnected(&graph(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )));
    }

    #[test]
    fn bfs_examples() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(bfs_shortest_path(&path, 0, 2), Some(vec![0, 1, 2]));
        assert_eq!(bfs_shortest_path(&path, 1, 1), Some(vec![1]));
        assert_eq!(bfs_shortest_path(&graph(3, &[(0, 1)]), 0, 2), None);
        // C4: both routes have two hops; the lower-id neighbour wins
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(bfs_shortest_path(&c4, 0, 2), Some(vec![0, 1, 2]));
    }
}
