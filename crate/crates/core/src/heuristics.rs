//! Maximum vertex covering algorithm (MVCA) greedy for both modes.
//!
//! Starting from no labels, every unused label is scored by the counts the
//! working graph would have after adding it; the lowest score wins. In
//! bi-connected mode the score is blocks plus components, in connected mode
//! just components. Ties go to fewer components, then to the smaller id.

use web_time::Instant;

use crate::dynamic_blocks::TrackerState;
use crate::labelled_graph::{Label, LabelSet, LabelledGraph};
use crate::outcome::{Method, Mode, SolveError, SolverOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateScore {
    pub label: Label,
    pub score: usize,
    pub blocks: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// One entry per unused label, ascending by label id.
    pub candidates: Vec<CandidateScore>,
    pub chosen: CandidateScore,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyTrace {
    pub steps: Vec<TraceStep>,
    /// `(block_count, component_count)` after the last step.
    pub final_counts: (usize, usize),
}

impl GreedyTrace {
    pub fn chosen(&self) -> Vec<Label> {
        self.steps.iter().map(|s| s.chosen.label).collect()
    }

    /// `iter=<k> chosen=<label> score=<s> blocks=<b> comps=<c>`, one line per
    /// iteration, `k` counting from 1.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(k, s)| {
                format!(
                    "iter={} chosen={} score={} blocks={} comps={}",
                    k + 1,
                    s.chosen.label,
                    s.chosen.score,
                    s.chosen.blocks,
                    s.chosen.components
                )
            })
            .collect()
    }
}

fn score(mode: Mode, (blocks, components): (usize, usize)) -> usize {
    match mode {
        Mode::Biconnected => blocks + components,
        Mode::Connected => components,
    }
}

fn done(mode: Mode, state: &TrackerState) -> bool {
    match mode {
        Mode::Biconnected => state.is_spanning_biconnected(),
        Mode::Connected => state.component_count() == 1,
    }
}

/// Runs the greedy. Fails with [`SolveError::Infeasible`] when even the full
/// label set does not satisfy `mode`.
pub fn mvca(g: &LabelledGraph, mode: Mode) -> Result<(SolverOutcome, GreedyTrace), SolveError> {
    let start = Instant::now();
    if !mode.accepts(&g.induced_subgraph(&g.all_labels())) {
        return Err(SolveError::Infeasible(mode));
    }

    let q = g.label_count();
    let mut state = TrackerState::new(g.vertex_count()).expect("instance has vertices");
    let mut chosen = LabelSet::empty(q);
    let mut trace = GreedyTrace::default();
    let mut probes = 0u64;

    // the precheck guarantees termination once every label is in
    while !done(mode, &state) {
        let candidates: Vec<CandidateScore> = (0..q)
            .filter(|&l| !chosen.contains(l))
            .map(|label| {
                let counts = state.evaluate_label(g, label);
                CandidateScore {
                    label,
                    score: score(mode, counts),
                    blocks: counts.0,
                    components: counts.1,
                }
            })
            .collect();
        probes += candidates.len() as u64;
        let best = *candidates
            .iter()
            .min_by_key(|c| (c.score, c.components, c.label))
            .expect("an unused label remains while the state is infeasible");
        state.add_label(g, best.label);
        chosen.insert(best.label);
        trace.steps.push(TraceStep {
            candidates,
            chosen: best,
        });
    }
    trace.final_counts = state.counts();

    let mut outcome = SolverOutcome::found(chosen, mode, Method::Mvca, probes);
    outcome.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((outcome, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::labelled_graph::load_instance;

    const K4: &str = "4 6 3\n0 1 0\n1 2 0\n2 3 1\n0 3 1\n0 2 2\n1 3 2\n";

    #[test]
    fn k4_biconnected_trace() {
        let g = load_instance(K4).unwrap();
        let (outcome, trace) = mvca(&g, Mode::Biconnected).unwrap();

        // oracle: score each first-round candidate by decomposing G({l})
        for l in 0..3 {
            let d = decompose(&g.induced_subgraph(&LabelSet::from_labels(3, [l])));
            assert_eq!(d.block_count() + d.component_count, 6);
        }
        let first: Vec<usize> = trace.steps[0].candidates.iter().map(|c| c.score).collect();
        assert_eq!(first, vec![6, 6, 6]);
        assert_eq!(trace.chosen(), vec![0, 1]);
        assert_eq!(outcome.labels.to_vec(), vec![0, 1]);
        assert_eq!(outcome.size, 2);
        assert_eq!(trace.final_counts, (1, 1));
        assert_eq!(
            trace.lines(),
            vec![
                "iter=1 chosen=0 score=6 blocks=4 comps=2",
                "iter=2 chosen=1 score=2 blocks=1 comps=1",
            ]
        );
    }

    #[test]
    fn single_label_cycle() {
        let g = load_instance("5 5 2\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n").unwrap();
        let (outcome, trace) = mvca(&g, Mode::Biconnected).unwrap();
        assert_eq!(outcome.labels.to_vec(), vec![1]);
        assert_eq!(trace.steps.len(), 1);
    }

    #[test]
    fn path_is_infeasible() {
        let g = load_instance("3 2 2\n0 1 0\n1 2 1\n").unwrap();
        assert_eq!(
            mvca(&g, Mode::Biconnected).unwrap_err(),
            SolveError::Infeasible(Mode::Biconnected)
        );
        let (outcome, _) = mvca(&g, Mode::Connected).unwrap();
        assert_eq!(outcome.size, 2);
    }

    #[test]
    fn single_vertex_needs_no_labels() {
        let g = load_instance("1 0 2\n").unwrap();
        let (outcome, trace) = mvca(&g, Mode::Biconnected).unwrap();
        assert!(outcome.feasible);
        assert_eq!(outcome.size, 0);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn connected_mode_scores_components() {
        let g = load_instance(K4).unwrap();
        let (outcome, trace) = mvca(&g, Mode::Connected).unwrap();
        assert_eq!(trace.steps[0].chosen.score, 2);
        assert_eq!(outcome.size, 2);
    }

    #[test]
    fn stalled_greedy_still_finishes() {
        // triangles {0,1,2} and {3,4,5} joined by a bridge; labels 1 and 2
        // each only pull the bridge into one triangle, together they weld
        let g =
            load_instance("6 9 3\n0 1 0\n1 2 0\n0 2 0\n3 4 0\n4 5 0\n3 5 0\n2 3 0\n2 4 1\n1 3 2\n")
                .unwrap();
        let (outcome, trace) = mvca(&g, Mode::Biconnected).unwrap();
        assert_eq!(trace.steps[0].chosen.score, 3);
        assert_eq!(trace.steps[1].chosen.score, 3);
        assert_eq!(trace.steps[2].chosen.score, 2);
        assert_eq!(outcome.labels.to_vec(), vec![0, 1, 2]);
        assert!(Mode::Biconnected.accepts(&g.induced_subgraph(&outcome.labels)));
    }
}
