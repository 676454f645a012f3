//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export takes instance text in the usual `n m q` format and returns
//! a JSON string, so the page needs no generated TypeScript glue beyond
//! plain string calls.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use mlsb::{
    decompose, exact_solve, generate, is_biconnected, load_instance, mvca, GeneratorConfig,
    LabelSet, LabelledGraph, Mode, SolveError,
};

#[derive(Serialize)]
struct EdgeView {
    u: usize,
    v: usize,
    label: usize,
    /// Not in the selected label set.
    hidden: bool,
    /// Index into `blocks`, absent for bridges and hidden edges.
    block: Option<usize>,
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    q: usize,
    edges: Vec<EdgeView>,
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    block_count: usize,
    component_count: usize,
    biconnected: bool,
}

#[derive(Serialize)]
struct TraceRow {
    chosen: usize,
    score: usize,
    blocks: usize,
    components: usize,
    candidates: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct SolveView {
    method: &'static str,
    mode: String,
    feasible: bool,
    timed_out: bool,
    labels: Vec<usize>,
    size: usize,
    nodes: u64,
    trace: Vec<TraceRow>,
}

fn parse(text: &str) -> Result<LabelledGraph, JsError> {
    load_instance(text).map_err(|e| JsError::new(&e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(|e| JsError::new(&e.to_string()))
}

fn parse_mode(mode: &str) -> Result<Mode, JsError> {
    mode.parse().map_err(|e: String| JsError::new(&e))
}

/// Seeded random instance as instance text.
#[wasm_bindgen]
pub fn generate_instance(
    n: usize,
    m: usize,
    q: usize,
    seed: u64,
    feasible: bool,
) -> Result<String, JsError> {
    let config = GeneratorConfig {
        n,
        m,
        q,
        seed,
        guarantee_feasible: feasible,
    };
    generate(&config)
        .map(|g| g.to_text())
        .map_err(|e| JsError::new(&e.to_string()))
}

/// Block structure of G(L) for the comma-separated label list `labels`.
#[wasm_bindgen]
pub fn analyze(text: &str, labels: &str) -> Result<String, JsError> {
    let g = parse(text)?;
    let mut set = LabelSet::empty(g.label_count());
    for part in labels.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let l: usize = part
            .parse()
            .map_err(|_| JsError::new(&format!("bad label {part:?}")))?;
        if l >= g.label_count() {
            return Err(JsError::new(&format!("label {l} out of range")));
        }
        set.insert(l);
    }
    let sub = g.induced_subgraph(&set);
    let d = decompose(&sub);
    let block_of = |u: usize, v: usize| d.blocks.iter().position(|b| b.edges.contains(&(u, v)));
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let hidden = !set.contains(e.label);
            EdgeView {
                u: e.u,
                v: e.v,
                label: e.label,
                hidden,
                block: if hidden { None } else { block_of(e.u, e.v) },
            }
        })
        .collect();
    to_json(&Analysis {
        n: g.vertex_count(),
        q: g.label_count(),
        edges,
        blocks: d.blocks.iter().map(|b| b.vertices.clone()).collect(),
        cut_vertices: d.cut_vertices.clone(),
        block_count: d.block_count(),
        component_count: d.component_count,
        biconnected: is_biconnected(&sub),
    })
}

/// Runs `method` (`exact` or `mvca`) in `mode` (`mlsb` or `mlst`).
/// The exact search gives up after `timeout_ms` and returns its incumbent.
#[wasm_bindgen]
pub fn solve(text: &str, mode: &str, method: &str, timeout_ms: u32) -> Result<String, JsError> {
    let g = parse(text)?;
    let mode = parse_mode(mode)?;
    let q = g.label_count();
    let mut view = SolveView {
        method: "",
        mode: mode.to_string(),
        feasible: false,
        timed_out: false,
        labels: Vec::new(),
        size: 0,
        nodes: 0,
        trace: Vec::new(),
    };
    match method {
        "exact" => {
            view.method = "exact";
            let limit = std::time::Duration::from_millis(timeout_ms.into());
            let outcome = match exact_solve(&g, mode, Some(limit)) {
                Ok(o) => o,
                Err(SolveError::TimeLimitExceeded(partial)) => {
                    view.timed_out = true;
                    *partial
                }
                Err(e) => return Err(JsError::new(&e.to_string())),
            };
            view.feasible = outcome.feasible;
            view.labels = outcome.labels.to_vec();
            view.size = outcome.size;
            view.nodes = outcome.nodes_explored;
        }
        "mvca" => {
            view.method = "mvca";
            match mvca(&g, mode) {
                Ok((outcome, trace)) => {
                    view.feasible = true;
                    view.labels = outcome.labels.to_vec();
                    view.size = outcome.size;
                    view.nodes = outcome.nodes_explored;
                    view.trace = trace
                        .steps
                        .iter()
                        .map(|s| TraceRow {
                            chosen: s.chosen.label,
                            score: s.chosen.score,
                            blocks: s.chosen.blocks,
                            components: s.chosen.components,
                            candidates: s.candidates.iter().map(|c| (c.label, c.score)).collect(),
                        })
                        .collect();
                }
                Err(SolveError::Infeasible(_)) => view.labels = LabelSet::empty(q).to_vec(),
                Err(e) => return Err(JsError::new(&e.to_string())),
            }
        }
        other => return Err(JsError::new(&format!("unknown method {other:?}"))),
    }
    to_json(&view)
}
