//! Edge-labelled instances, label sets and the plain graphs they induce.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type Vertex = usize;
pub type Label = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("instance must have at least one vertex")]
    NoVertices,
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("label {label} out of range for q={q}")]
    LabelOutOfRange { label: Label, q: usize },
}

/// One labelled edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRecord {
    pub u: Vertex,
    pub v: Vertex,
    pub label: Label,
}

impl EdgeRecord {
    pub fn new(a: Vertex, b: Vertex, label: Label) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        EdgeRecord { u, v, label }
    }
}

/// A set of label ids in `0..q`, iterated in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LabelSet {
    words: Vec<u64>,
    universe: usize,
}

impl LabelSet {
    pub fn empty(universe: usize) -> Self {
        LabelSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = LabelSet::empty(universe);
        for l in 0..universe {
            set.insert(l);
        }
        set
    }

    /// Builds a set from ids; panics if any id is `>= universe`.
    pub fn from_labels<I: IntoIterator<Item = Label>>(universe: usize, labels: I) -> Self {
        let mut set = LabelSet::empty(universe);
        for l in labels {
            set.insert(l);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, label: Label) -> bool {
        assert!(
            label < self.universe,
            "label {label} outside universe {}",
            self.universe
        );
        let (w, b) = (label / 64, label % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, label: Label) -> bool {
        if label >= self.universe {
            return false;
        }
        let (w, b) = (label / 64, label % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, label: Label) -> bool {
        label < self.universe && self.words[label / 64] & (1 << (label % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.universe).filter(move |&l| self.contains(l))
    }

    pub fn to_vec(&self) -> Vec<Label> {
        self.iter().collect()
    }
}

impl fmt::Display for LabelSet {
    /// Comma-separated ascending ids, empty string for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Undirected graph on vertices `0..n` with ascending neighbour lists.
///
/// Each adjacency entry carries the index of the edge in `edges`, so
/// algorithms can classify edges without hashing vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, usize)>>,
}

impl PlainGraph {
    /// Builds a graph from undirected pairs. Pairs are normalized to `u < v`;
    /// callers are responsible for excluding self-loops and duplicates.
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, pairs: I) -> Self {
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in pairs {
            debug_assert!(a != b && a < n && b < n);
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let id = edges.len();
            edges.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        PlainGraph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbours of `v` with the connecting edge id, ascending by neighbour.
    pub fn adjacent(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }
}

/// An instance: `n` vertices, `q` labels and a simple labelled edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    n: usize,
    q: usize,
    edges: Vec<EdgeRecord>,
}

impl LabelledGraph {
    /// Validates and builds an instance. Edge order is kept as given.
    pub fn new(n: usize, q: usize, edges: Vec<EdgeRecord>) -> Result<Self, InstanceError> {
        if n == 0 {
            return Err(InstanceError::NoVertices);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for e in edges {
            let e = EdgeRecord::new(e.u, e.v, e.label);
            if e.u == e.v {
                return Err(InstanceError::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(InstanceError::VertexOutOfRange { vertex: e.v, n });
            }
            if e.label >= q {
                return Err(InstanceError::LabelOutOfRange { label: e.label, q });
            }
            if !seen.insert((e.u, e.v)) {
                return Err(InstanceError::DuplicateEdge(e.u, e.v));
            }
            normalized.push(e);
        }
        Ok(LabelledGraph {
            n,
            q,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn label_count(&self) -> usize {
        self.q
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    /// Edges carrying `label`, in canonical instance order.
    pub fn edges_with_label(&self, label: Label) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.edges.iter().filter(move |e| e.label == label)
    }

    pub fn all_labels(&self) -> LabelSet {
        LabelSet::full(self.q)
    }

    /// G(L): every vertex, and exactly the edges whose label is in `labels`.
    pub fn induced_subgraph(&self, labels: &LabelSet) -> PlainGraph {
        PlainGraph::from_edges(
            self.n,
            self.edges
                .iter()
                .filter(|e| labels.contains(e.label))
                .map(|e| (e.u, e.v)),
        )
    }

    /// Number of edges per label id.
    pub fn label_frequencies(&self) -> Vec<usize> {
        let mut counts = vec![0; self.q];
        for e in &self.edges {
            counts[e.label] += 1;
        }
        counts
    }

    /// Serializes in the instance text format (`n m q` header, then `u v l`).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.edges.len(), self.q);
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.label));
        }
        out
    }
}

impl FromStr for LabelledGraph {
    type Err = InstanceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        load_instance(s)
    }
}

fn parse_fields(line: &str, lineno: usize) -> Result<[usize; 3], InstanceError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(InstanceError::Parse {
            line: lineno,
            msg: format!("expected 3 fields, found {}", fields.len()),
        });
    }
    let mut out = [0usize; 3];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| InstanceError::Parse {
            line: lineno,
            msg: format!("invalid integer {field:?}"),
        })?;
    }
    Ok(out)
}

/// Parses the instance text format. Blank lines and `#` comments are skipped.
pub fn load_instance(text: &str) -> Result<LabelledGraph, InstanceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(InstanceError::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let [n, m, q] = parse_fields(header, hline)?;

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v, l] = parse_fields(line, lineno)?;
        if u == v {
            return Err(InstanceError::SelfLoop(u));
        }
        edges.push(EdgeRecord::new(u, v, l));
    }
    if edges.len() != m {
        return Err(InstanceError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    LabelledGraph::new(n, q, edges)
}

pub fn save_instance(g: &LabelledGraph) -> String {
    g.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TRIANGLE: &str = "3 3 3\n0 1 0\n1 2 1\n0 2 2\n";
    const K4: &str = "4 6 3\n0 1 0\n1 2 0\n2 3 1\n0 3 1\n0 2 2\n1 3 2\n";

    #[test]
    fn loads_triangle() {
        let g = load_instance(TRIANGLE).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.label_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn loads_single_vertex() {
        let g = load_instance("1 0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert_eq!(
            load_instance("3 2 1\n0 1 0\n0 1 0\n"),
            Err(InstanceError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            load_instance("3 2 2\n0 1 0\n1 0 1\n"),
            Err(InstanceError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            load_instance("3 1 1\n1 1 0\n"),
            Err(InstanceError::SelfLoop(1))
        ));
        assert!(matches!(
            load_instance("3 1 1\n0 3 0\n"),
            Err(InstanceError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            load_instance("3 1 1\n0 1 1\n"),
            Err(InstanceError::LabelOutOfRange { label: 1, q: 1 })
        ));
        assert!(matches!(
            load_instance("3 2 1\n0 1 0\n"),
            Err(InstanceError::EdgeCount {
                declared: 2,
                found: 1
            })
        ));
        assert!(matches!(
            load_instance("3 1 1\n0 x 0\n"),
            Err(InstanceError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_instance("3 1\n"),
            Err(InstanceError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            load_instance(""),
            Err(InstanceError::Parse { .. })
        ));
        assert_eq!(load_instance("0 0 0\n"), Err(InstanceError::NoVertices));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = load_instance("# header comment\n\n3 1 2\n  # edge below\n2 0 1\n\n").unwrap();
        assert_eq!(
            g.edges(),
            &[EdgeRecord {
                u: 0,
                v: 2,
                label: 1
            }]
        );
    }

    #[test]
    fn induced_subgraph_filters_by_label() {
        let g = load_instance(TRIANGLE).unwrap();
        let sub = g.induced_subgraph(&LabelSet::from_labels(3, [0, 1]));
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);

        let none = g.induced_subgraph(&LabelSet::empty(3));
        assert_eq!(none.vertex_count(), 3);
        assert_eq!(none.edge_count(), 0);

        let all = g.induced_subgraph(&g.all_labels());
        assert_eq!(all.edge_count(), 3);
    }

    #[test]
    fn label_frequencies_count_edges() {
        assert_eq!(
            load_instance(TRIANGLE).unwrap().label_frequencies(),
            vec![1, 1, 1]
        );
        assert_eq!(
            load_instance(K4).unwrap().label_frequencies(),
            vec![2, 2, 2]
        );
        assert_eq!(
            load_instance("4 0 3\n").unwrap().label_frequencies(),
            vec![0, 0, 0]
        );
    }

    #[test]
    fn label_set_basics() {
        let mut s = LabelSet::empty(130);
        assert!(s.is_empty());
        assert!(s.insert(129));
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert_eq!(s.to_vec(), vec![3, 129]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "3,129");
        assert!(s.remove(3));
        assert!(!s.contains(3));
        assert_eq!(LabelSet::empty(4).to_string(), "");
        assert_eq!(LabelSet::full(3).to_string(), "0,1,2");
    }

    fn arb_instance() -> impl Strategy<Value = LabelledGraph> {
        (1usize..9, 1usize..5).prop_flat_map(|(n, q)| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let k = pairs.len();
            (
                Just(n),
                Just(q),
                proptest::collection::vec(proptest::option::of(0..q), k),
            )
                .prop_map(move |(n, q, labels)| {
                    let edges = pairs
                        .iter()
                        .zip(labels)
                        .filter_map(|(&(u, v), l)| l.map(|l| EdgeRecord::new(v, u, l)))
                        .collect();
                    LabelledGraph::new(n, q, edges).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn save_load_round_trip(g in arb_instance()) {
            let reloaded = load_instance(&save_instance(&g)).unwrap();
            prop_assert_eq!(&reloaded, &g);
            prop_assert_eq!(save_instance(&reloaded), save_instance(&g));
        }

        #[test]
        fn induced_subgraph_is_monotone(g in arb_instance(), a in any::<u8>(), b in any::<u8>()) {
            let q = g.label_count();
            let small = LabelSet::from_labels(q, (0..q).filter(|l| a & b & (1 << l) != 0));
            let large = LabelSet::from_labels(q, (0..q).filter(|l| a & (1 << l) != 0));
            prop_assert!(small.is_subset(&large));
            let es: HashSet<_> = g.induced_subgraph(&small).edges().iter().copied().collect();
            let el: HashSet<_> = g.induced_subgraph(&large).edges().iter().copied().collect();
            prop_assert!(es.is_subset(&el));
            prop_assert_eq!(g.induced_subgraph(&g.all_labels()).edge_count(), g.edge_count());
        }
    }
}
