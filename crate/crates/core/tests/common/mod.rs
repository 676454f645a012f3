//! Brute-force oracles and random inputs shared by the integration tests.
//! Nothing here calls into the DFS decomposition.

#![allow(dead_code)]

use mlsb::{EdgeRecord, LabelledGraph};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const K4: &str = "4 6 3\n0 1 0\n1 2 0\n2 3 1\n0 3 1\n0 2 2\n1 3 2\n";

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `lo..=hi` (slight modulo bias is irrelevant here).
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64) < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.range(0, i);
            items.swap(i, j);
        }
    }
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Random simple graph on `n` vertices, each pair kept with probability `p`.
pub fn random_graph(rng: &mut SeededRng, n: usize, p: f64) -> Vec<(usize, usize)> {
    all_pairs(n).into_iter().filter(|_| rng.chance(p)).collect()
}

/// Random labelled instance with arbitrary density (possibly empty).
pub fn random_instance(rng: &mut SeededRng, n: usize, q: usize, p: f64) -> LabelledGraph {
    let edges = random_graph(rng, n, p)
        .into_iter()
        .map(|(u, v)| EdgeRecord::new(u, v, rng.range(0, q - 1)))
        .collect();
    LabelledGraph::new(n, q, edges).unwrap()
}

/// Connected components among vertices not in `removed`, ignoring edge
/// `skip_edge`, by repeated label propagation.
pub fn count_components(
    n: usize,
    edges: &[(usize, usize)],
    removed: Option<usize>,
    skip_edge: Option<usize>,
) -> usize {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if Some(i) == skip_edge || Some(u) == removed || Some(v) == removed {
                continue;
            }
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = (0..n)
        .filter(|&v| Some(v) != removed)
        .map(|v| label[v])
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

pub fn oracle_cut_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let base = count_components(n, edges, None, None);
    (0..n)
        .filter(|&v| count_components(n, edges, Some(v), None) > base)
        .collect()
}

pub fn oracle_bridges(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let base = count_components(n, edges, None, None);
    let mut out: Vec<_> = (0..edges.len())
        .filter(|&i| count_components(n, edges, None, Some(i)) > base)
        .map(|i| edges[i])
        .collect();
    out.sort_unstable();
    out
}

/// Two vertex-disjoint paths between every pair, by vertex removal.
pub fn oracle_biconnected(n: usize, edges: &[(usize, usize)]) -> bool {
    match n {
        0 => false,
        1 => true,
        2 => false,
        _ => {
            count_components(n, edges, None, None) == 1
                && (0..n).all(|v| count_components(n, edges, Some(v), None) == 1)
        }
    }
}

pub fn oracle_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    n > 0 && count_components(n, edges, None, None) == 1
}
