//! Exact branch-and-prune search over label subsets, and a brute-force
//! enumeration used to cross-check it.
//!
//! The search walks the subset tree depth first. Labels are tried in a fixed
//! order (descending edge frequency, then ascending id) and each node only
//! extends its set with labels later in that order, so every subset is
//! visited at most once. A node is abandoned when
//!
//! * its set is already feasible (no superset is smaller),
//! * one more label would not beat the incumbent,
//! * adding every remaining label still fails the predicate, or
//! * in bi-connected mode, fewer than `n` edges remain reachable.

use itertools::Itertools;
use web_time::{Duration, Instant};

use crate::labelled_graph::{EdgeRecord, Label, LabelSet, LabelledGraph, PlainGraph};
use crate::outcome::{Method, Mode, SolveError, SolverOutcome};

/// Largest label universe the brute-force oracle accepts.
pub const ORACLE_MAX_LABELS: usize = 20;

/// A partial solution in the subset tree.
#[derive(Debug, Clone)]
pub struct SearchNode {
    pub included: LabelSet,
    /// Position in the branching order of the first label still eligible.
    pub next: usize,
    pub depth: usize,
}

/// Branching order: descending edge count, ties by ascending id.
pub fn branching_order(g: &LabelledGraph) -> Vec<Label> {
    let freq = g.label_frequencies();
    let mut order: Vec<Label> = (0..g.label_count()).collect();
    order.sort_by_key(|&l| (std::cmp::Reverse(freq[l]), l));
    order
}

struct Search<'a> {
    g: &'a LabelledGraph,
    mode: Mode,
    order: Vec<Label>,
    label_edges: Vec<Vec<EdgeRecord>>,
    /// Edges of `order[i..]`, for each `i` (the last entry is empty).
    suffix_edges: Vec<Vec<(usize, usize)>>,
    best: Option<LabelSet>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    fn best_size(&self) -> usize {
        self.best
            .as_ref()
            .map_or(self.g.label_count() + 1, LabelSet::len)
    }

    fn included_edges(&self, included: &LabelSet) -> Vec<(usize, usize)> {
        included
            .iter()
            .flat_map(|l| self.label_edges[l].iter().map(|e| (e.u, e.v)))
            .collect()
    }

    fn visit(&mut self, node: SearchNode) {
        if self.timed_out {
            return;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out = true;
                return;
            }
        }
        self.nodes += 1;
        let n = self.g.vertex_count();

        let edges = self.included_edges(&node.included);
        if self
            .mode
            .accepts(&PlainGraph::from_edges(n, edges.iter().copied()))
        {
            if node.included.len() < self.best_size() {
                self.best = Some(node.included);
            }
            return;
        }
        if node.included.len() + 1 >= self.best_size() {
            return;
        }
        let suffix = &self.suffix_edges[node.next];
        if self.mode == Mode::Biconnected && n >= 3 && edges.len() + suffix.len() < n {
            return;
        }
        let optimistic = PlainGraph::from_edges(n, edges.iter().chain(suffix).copied());
        if !self.mode.accepts(&optimistic) {
            return;
        }

        for i in node.next..self.order.len() {
            if node.included.len() + 1 >= self.best_size() || self.timed_out {
                break;
            }
            let mut included = node.included.clone();
            included.insert(self.order[i]);
            self.visit(SearchNode {
                included,
                next: i + 1,
                depth: node.depth + 1,
            });
        }
    }
}

/// Minimum-cardinality label set whose induced subgraph satisfies `mode`.
///
/// Returns `feasible=false` when the full label set already fails. When
/// `time_limit` elapses the search stops and the best incumbent (if any) is
/// returned inside [`SolveError::TimeLimitExceeded`].
pub fn exact_solve(
    g: &LabelledGraph,
    mode: Mode,
    time_limit: Option<Duration>,
) -> Result<SolverOutcome, SolveError> {
    let start = Instant::now();
    let q = g.label_count();
    let order = branching_order(g);
    let mut label_edges = vec![Vec::new(); q];
    for e in g.edges() {
        label_edges[e.label].push(*e);
    }
    let mut suffix_edges = vec![Vec::new(); q + 1];
    for i in (0..q).rev() {
        let mut edges = suffix_edges[i + 1].clone();
        edges.extend(label_edges[order[i]].iter().map(|e| (e.u, e.v)));
        suffix_edges[i] = edges;
    }

    let mut search = Search {
        g,
        mode,
        order,
        label_edges,
        suffix_edges,
        best: None,
        nodes: 0,
        deadline: time_limit.map(|d| start + d),
        timed_out: false,
    };
    search.visit(SearchNode {
        included: LabelSet::empty(q),
        next: 0,
        depth: 0,
    });

    let mut outcome = match search.best {
        Some(best) => SolverOutcome::found(best, mode, Method::Exact, search.nodes),
        None => SolverOutcome::infeasible(q, mode, Method::Exact, search.nodes),
    };
    outcome.elapsed_ms = start.elapsed().as_millis() as u64;
    if search.timed_out {
        return Err(SolveError::TimeLimitExceeded(Box::new(outcome)));
    }
    Ok(outcome)
}

/// Tries every label subset by increasing size, lexicographically within a
/// size, and returns the first that satisfies `mode`.
///
/// With `max_size`, sizes above the cap are not enumerated; if the full set
/// is feasible but nothing within the cap is, the result is
/// [`SolveError::SizeCapExceeded`].
pub fn brute_force_optimum(
    g: &LabelledGraph,
    mode: Mode,
    max_size: Option<usize>,
) -> Result<SolverOutcome, SolveError> {
    let start = Instant::now();
    let q = g.label_count();
    if q > ORACLE_MAX_LABELS {
        return Err(SolveError::TooManyLabels(q));
    }
    let cap = max_size.map_or(q, |c| c.min(q));
    let mut tested = 0u64;
    for k in 0..=cap {
        for subset in (0..q).combinations(k) {
            tested += 1;
            let labels = LabelSet::from_labels(q, subset);
            if mode.accepts(&g.induced_subgraph(&labels)) {
                let mut outcome = SolverOutcome::found(labels, mode, Method::Oracle, tested);
                outcome.elapsed_ms = start.elapsed().as_millis() as u64;
                return Ok(outcome);
            }
        }
    }
    if cap < q && mode.accepts(&g.induced_subgraph(&g.all_labels())) {
        return Err(SolveError::SizeCapExceeded(cap));
    }
    let mut outcome = SolverOutcome::infeasible(q, mode, Method::Oracle, tested);
    outcome.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelled_graph::load_instance;

    const K4: &str = "4 6 3\n0 1 0\n1 2 0\n2 3 1\n0 3 1\n0 2 2\n1 3 2\n";
    const TRIANGLE: &str = "3 3 3\n0 1 0\n1 2 1\n0 2 2\n";

    #[test]
    fn k4_optima() {
        let g = load_instance(K4).unwrap();
        let bic = exact_solve(&g, Mode::Biconnected, None).unwrap();
        assert!(bic.feasible);
        assert_eq!(bic.labels.to_vec(), vec![0, 1]);
        let con = exact_solve(&g, Mode::Connected, None).unwrap();
        assert_eq!(con.size, 2);
    }

    #[test]
    fn k4_oracle() {
        let g = load_instance(K4).unwrap();
        let o = brute_force_optimum(&g, Mode::Biconnected, None).unwrap();
        assert_eq!(o.labels.to_vec(), vec![0, 1]);
        // 1 empty set + 3 singletons + {0,1}
        assert_eq!(o.nodes_explored, 5);
    }

    #[test]
    fn single_label_cycle() {
        let g = load_instance("4 4 3\n0 1 2\n1 2 2\n2 3 2\n0 3 2\n").unwrap();
        let o = exact_solve(&g, Mode::Biconnected, None).unwrap();
        assert_eq!(o.labels.to_vec(), vec![2]);
    }

    #[test]
    fn triangle_needs_every_label() {
        let g = load_instance(TRIANGLE).unwrap();
        assert_eq!(
            brute_force_optimum(&g, Mode::Biconnected, None)
                .unwrap()
                .size,
            3
        );
        assert_eq!(exact_solve(&g, Mode::Biconnected, None).unwrap().size, 3);
        assert_eq!(exact_solve(&g, Mode::Connected, None).unwrap().size, 2);
    }

    #[test]
    fn path_is_infeasible() {
        let g = load_instance("3 2 2\n0 1 0\n1 2 1\n").unwrap();
        let o = brute_force_optimum(&g, Mode::Biconnected, None).unwrap();
        assert!(!o.feasible);
        assert!(o.labels.is_empty());
        let e = exact_solve(&g, Mode::Biconnected, None).unwrap();
        assert!(!e.feasible);
        assert_eq!(e.size, 0);
    }

    #[test]
    fn size_cap_and_label_limit() {
        let g = load_instance(TRIANGLE).unwrap();
        assert_eq!(
            brute_force_optimum(&g, Mode::Biconnected, Some(2)),
            Err(SolveError::SizeCapExceeded(2))
        );
        assert!(brute_force_optimum(&g, Mode::Biconnected, Some(3)).is_ok());
        let big = load_instance("3 1 21\n0 1 20\n").unwrap();
        assert_eq!(
            brute_force_optimum(&big, Mode::Connected, None),
            Err(SolveError::TooManyLabels(21))
        );
    }

    #[test]
    fn branching_order_by_frequency() {
        let g = load_instance("4 4 3\n0 1 2\n1 2 2\n2 3 1\n0 3 0\n").unwrap();
        assert_eq!(branching_order(&g), vec![2, 0, 1]);
    }

    #[test]
    fn zero_time_limit_reports_timeout() {
        let g = load_instance(K4).unwrap();
        match exact_solve(&g, Mode::Biconnected, Some(Duration::ZERO)) {
            Err(SolveError::TimeLimitExceeded(partial)) => assert!(!partial.feasible),
            other => panic!("expected timeout, got {other:?}"),
        }
    }

    #[test]
    fn single_vertex_uses_no_labels() {
        let g = load_instance("1 0 3\n").unwrap();
        let o = exact_solve(&g, Mode::Biconnected, None).unwrap();
        assert!(o.feasible);
        assert_eq!(o.size, 0);
        assert_eq!(o.nodes_explored, 1);
    }
}
